"""Polynomial-in-n coefficient sequences and recurrence problem instances.

Every coefficient sequence in this package — the a_n, b_n of the
recurrence, the forcing term f_n, continued fraction partial numerators
and denominators — is a polynomial in the index n with exact rational
coefficients.  The text grammar accepted by :func:`parse_polyseq` is the
input contract for the CLI:

    expr  := term (('+'|'-') term)*
    term  := coeff ('*' 'n' ('^' uint)?)? | 'n' ('^' uint)?
    coeff := int | int '/' uint

with insignificant whitespace, e.g. "3*n^2 + 3*n + 1" or "-1/2*n^3 - n".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainViolation, ParseError


@dataclass(frozen=True)
class PolySeq:
    """The sequence n -> sum_k coeffs[k] * n^k.

    Canonical form: trailing zero coefficients are trimmed and the
    constant-zero sequence is stored as a single 0, so two PolySeqs are
    equal as dataclasses exactly when they are equal as polynomials.
    `offset_domain` is the smallest index at which the sequence may be
    evaluated.
    """

    coeffs: tuple[Fraction, ...]
    offset_domain: int = 0

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            coeffs = (Fraction(0),)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls) -> PolySeq:
        return cls((Fraction(0),))

    @classmethod
    def constant(cls, value) -> PolySeq:
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def eval(self, n: int) -> Fraction:
        """Exact value at index n (Horner)."""
        if n < self.offset_domain:
            raise DomainViolation(
                f"sequence defined for n >= {self.offset_domain}, got n = {n}"
            )
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __str__(self) -> str:
        return format_polyseq(self)


@dataclass(frozen=True)
class Recurrence:
    """Problem instance y_n = b_n*y_{n-1} + a_n*y_{n-2} + f_n for n >= 1,
    together with the initial values (y_{-1}, y_0)."""

    a: PolySeq
    b: PolySeq
    f: PolySeq
    y_init: tuple[Fraction, Fraction]

    def __post_init__(self):
        ym1, y0 = self.y_init
        object.__setattr__(self, "y_init", (Fraction(ym1), Fraction(y0)))

    @classmethod
    def homogeneous(cls, a: PolySeq, b: PolySeq, y_init) -> Recurrence:
        return cls(a=a, b=b, f=PolySeq.zero(), y_init=tuple(y_init))


_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<n>n)|(?P<op>[*^/+\-])|(?P<ws>\s+)")

# token kinds: "int", "n", or the operator character itself
_Token = tuple


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group()), pos))
        elif m.lastgroup == "n":
            tokens.append(("n", "n", pos))
        elif m.lastgroup == "op":
            tokens.append((m.group(), m.group(), pos))
        pos = m.end()
    return tokens


class _Cursor:
    def __init__(self, tokens: list[_Token], length: int):
        self.tokens = tokens
        self.i = 0
        self.end = length

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    @property
    def pos(self) -> int:
        tok = self.peek()
        return tok[2] if tok is not None else self.end


def _parse_uint(cur: _Cursor, what: str) -> int:
    tok = cur.peek()
    if tok is None or tok[0] != "int":
        raise ParseError(f"expected {what}", cur.pos)
    cur.take()
    return tok[1]


def _parse_power(cur: _Cursor) -> int:
    """Exponent after an 'n' token: '^' uint, defaulting to 1."""
    tok = cur.peek()
    if tok is not None and tok[0] == "^":
        cur.take()
        return _parse_uint(cur, "exponent")
    return 1


def _parse_term(cur: _Cursor) -> tuple[Fraction, int]:
    sign = 1
    tok = cur.peek()
    if tok is not None and tok[0] in "+-":  # signed coefficient
        cur.take()
        if tok[0] == "-":
            sign = -1
    coeff, power = _parse_unsigned_term(cur)
    return sign * coeff, power


def _parse_unsigned_term(cur: _Cursor) -> tuple[Fraction, int]:
    tok = cur.peek()
    if tok is None:
        raise ParseError("expected term", cur.pos)
    if tok[0] == "int":
        cur.take()
        coeff = Fraction(tok[1])
        nxt = cur.peek()
        if nxt is not None and nxt[0] == "/":
            cur.take()
            den_pos = cur.pos
            den = _parse_uint(cur, "denominator")
            if den == 0:
                raise ParseError("zero denominator", den_pos)
            coeff = Fraction(tok[1], den)
        nxt = cur.peek()
        if nxt is not None and nxt[0] == "*":
            cur.take()
            nt = cur.peek()
            if nt is None or nt[0] != "n":
                raise ParseError("expected 'n'", cur.pos)
            cur.take()
            return coeff, _parse_power(cur)
        return coeff, 0
    if tok[0] == "n":
        cur.take()
        return Fraction(1), _parse_power(cur)
    raise ParseError("expected coefficient or 'n'", tok[2])


def parse_polyseq(text: str) -> PolySeq:
    """Parse the polynomial grammar into a canonical :class:`PolySeq`.

    Raises :class:`ParseError` carrying the character position of the
    first offending token.
    """
    cur = _Cursor(_tokenize(text), len(text))
    powers: dict[int, Fraction] = {}
    sign = 1
    while True:
        coeff, power = _parse_term(cur)
        powers[power] = powers.get(power, Fraction(0)) + sign * coeff
        tok = cur.peek()
        if tok is None:
            break
        if tok[0] not in "+-":
            raise ParseError("expected '+' or '-'", tok[2])
        cur.take()
        sign = -1 if tok[0] == "-" else 1
    top = max(powers)
    return PolySeq(tuple(powers.get(k, Fraction(0)) for k in range(top + 1)))


def format_polyseq(seq: PolySeq) -> str:
    """Canonical text form; parse_polyseq(format_polyseq(p)) == p."""
    if seq.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(seq.degree, -1, -1):
        c = seq.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            npart = "n" if k == 1 else f"n^{k}"
            body = npart if mag == 1 else f"{mag}*{npart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
