"""Exact scalars, dense polynomials in x, and the root products R(X, Y).

Scalars are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.  Polynomials are immutable and store
ascending coefficients with no trailing zeros.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def parse_rational(text: str | int) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (d > 0).  Plain ints are accepted too.

    Anything else (decimals, exponents, whitespace, bools) is rejected so
    that the text grammar stays exact and round-trippable.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational: {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(r: Fraction) -> str:
    return str(Fraction(r))


class Poly:
    """Dense univariate polynomial in x over the rationals.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Ints and Fractions mix
    freely with polynomials in arithmetic and comparisons.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def coerce(cls, value: Poly | Scalar) -> Poly:
        return value if isinstance(value, Poly) else cls((value,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        # out-of-range powers read as zero, which is what the banded builders want
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(map(str, self.coeffs))}])"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> Poly:
        return _raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return (-self) + other

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return _raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: Scalar) -> Poly:
        if not c:
            return ZERO
        return _raw(tuple(ci * c for ci in self.coeffs))

    def shift(self, k: int) -> Poly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return ZERO
        return _raw((Fraction(0),) * k + self.coeffs)

    def divmod(self, other: Poly | Scalar) -> tuple[Poly, Poly]:
        other = Poly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) <= db:
            return ZERO, self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] / lead
            quo[k - db] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    rem[k - db + j] -= c * bj
        return Poly(quo), Poly(rem[:db])

    def exact_div(self, other: Poly | Scalar) -> Poly:
        if isinstance(other, Poly) and len(other.coeffs) == 1:
            other = other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / other)
        q, r = self.divmod(other)
        if r:
            raise NonExactDivision(f"({self}) / ({other}) leaves remainder {r}")
        return q

    def __call__(self, t: Scalar) -> Fraction:
        return poly_eval(self, t)

    # -- text forms --------------------------------------------------------

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str | int]) -> Poly:
        if isinstance(items, (str, bytes)) or not isinstance(items, Sequence):
            raise ValueError(f"polynomial must be a list of rationals, got {items!r}")
        return cls(parse_rational(c) for c in items)


def _raw(coeffs: tuple[Fraction, ...]) -> Poly:
    # skip Fraction re-wrapping when inputs are known Fractions
    p = Poly.__new__(Poly)
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    p.coeffs = coeffs[:end]
    return p


ZERO = Poly()
ONE = Poly((1,))
X = Poly((0, 1))


def format_poly(p: Poly, var: str = "x") -> str:
    """Human form, descending powers: ``x^2 - 5x + 6``, ``(3/7)x - 1/2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}{mono}"
            else:
                body = f"({a}){mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RootList(tuple):
    """Ordered tuple of pairwise-distinct rationals."""

    def __new__(cls, elems: Iterable[Scalar] = ()):
        items = tuple(Fraction(e) if not isinstance(e, Fraction) else e for e in elems)
        if len(set(items)) != len(items):
            seen = set()
            dup = next(e for e in items if e in seen or seen.add(e))
            raise ValueError(f"root list has repeated element {dup}")
        return super().__new__(cls, items)

    def __repr__(self) -> str:
        return f"RootList([{', '.join(map(str, self))}])"

    def to_json(self) -> list[str]:
        return [format_rational(e) for e in self]

    @classmethod
    def from_json(cls, items: Sequence[str | int]) -> RootList:
        if isinstance(items, (str, bytes)) or not isinstance(items, Sequence):
            raise ValueError(f"root list must be a list of rationals, got {items!r}")
        return cls(parse_rational(e) for e in items)


def poly_eval(p: Poly, t: Scalar) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_from_roots(roots: Iterable[Scalar]) -> Poly:
    """Monic polynomial prod (x - r); the empty product is 1."""
    coeffs = [Fraction(1)]
    for r in roots:
        # multiply by (x - r) in place
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= c * r
        coeffs = nxt
    return Poly(coeffs)


def r_poly(ys: Iterable[Scalar]) -> Poly:
    """R(x, Y) as a polynomial in x."""
    return poly_from_roots(ys)


def r_pair(xs: Iterable[Scalar], ys: Iterable[Scalar]) -> Fraction:
    """R(X, Y): product of (x - y) over all pairs; 1 if either side is empty."""
    ys = tuple(ys)
    acc = Fraction(1)
    for x, y in product(tuple(xs), ys):
        acc *= x - y
    return acc


def binomial(d: int, p: int) -> int:
    if not 0 <= p <= d:
        raise ValueError(f"binomial({d}, {p}) needs 0 <= p <= d")
    return math.comb(d, p)


# Functional aliases for the ring operations.

def add(p: Poly, q: Poly) -> Poly:
    return p + q


def sub(p: Poly, q: Poly) -> Poly:
    return p - q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def neg(p: Poly) -> Poly:
    return -p


def scale(p: Poly, c: Scalar) -> Poly:
    return p.scale(c)


def exact_div(p: Poly, q: Poly) -> Poly:
    return p.exact_div(q)


class InadmissibleDegree(ValueError):
    """The requested subresultant index d is outside the defined range."""


def admissible(m: int, n: int, d: int) -> bool:
    """True iff 0 <= d < min(m, n), or d == min(m, n) with m != n."""
    lo = min(m, n)
    return 0 <= d < lo or (d == lo and m != n)


def check_admissible(m: int, n: int, d: int) -> None:
    if admissible(m, n, d):
        return
    if d < 0:
        why = "negative"
    elif d == min(m, n) and m == n:
        why = "m=n"
    else:
        why = f"exceeds min(m,n)={min(m, n)}"
    raise InadmissibleDegree(f"d={d} inadmissible: {why}")
