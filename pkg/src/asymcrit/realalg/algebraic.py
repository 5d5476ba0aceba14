"""Real algebraic numbers as (square-free integer polynomial, isolating interval)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import List, Tuple

from ..kernel import Poly, PolyRing
from . import univariate as U


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        if self.is_point():
            return f"[{self.lo}]"
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class AlgebraicNumber:
    """The unique root of the square-free ``coeffs`` inside ``interval``.

    ``coeffs`` holds integer coefficients from the constant term upwards.
    """

    coeffs: Tuple[int, ...]
    interval: IsolatingInterval

    @property
    def minimalish(self) -> Tuple[int, ...]:
        return self.coeffs

    @property
    def lo(self) -> Fraction:
        return self.interval.lo

    @property
    def hi(self) -> Fraction:
        return self.interval.hi

    def is_rational(self) -> bool:
        return self.interval.is_point() or U.degree(self.coeffs) == 1

    def as_rational(self) -> Fraction:
        if self.interval.is_point():
            return self.interval.lo
        if U.degree(self.coeffs) == 1:
            a0, a1 = self.coeffs
            return Fraction(-a0, a1)
        raise ValueError("not a rational number")

    def poly(self, ring: PolyRing, var: str) -> Poly:
        return U.to_poly(self.coeffs, ring, var)

    def refine(self, width) -> "AlgebraicNumber":
        return refine(self, width)

    def __float__(self):
        a = refine(self, Fraction(1, 2**60))
        return float(a.interval.mid)

    def __str__(self):
        if self.is_rational():
            return str(self.as_rational())
        return f"root of {list(self.coeffs)} in {self.interval}"


def squarefree_part(q: Poly) -> Poly:
    """q / gcd(q, q') with integer content removed and positive leading coefficient."""
    if q.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    used = q.used_vars()
    var = used[0] if used else q.ring.gens[0]
    return U.to_poly(U.squarefree(U.from_poly(q)), q.ring, var)


def _coeffs_of(q) -> List[int]:
    if isinstance(q, Poly):
        return U.primitive(U.from_poly(q))
    return U.primitive(q)


def isolate_real_roots(q) -> List[IsolatingInterval]:
    """Isolating intervals of the real roots of a square-free univariate ``q``."""
    a = _coeffs_of(q)
    return [IsolatingInterval(lo, hi) for lo, hi in U.isolate(a)]


def real_roots(q) -> List[AlgebraicNumber]:
    """Real roots of ``q`` (square-free part taken first), ascending."""
    a = U.squarefree(_coeffs_of(q))
    return [AlgebraicNumber(tuple(a), IsolatingInterval(lo, hi)) for lo, hi in U.isolate(a)]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def refine(a: AlgebraicNumber, width) -> AlgebraicNumber:
    """Bisect until the interval is no wider than ``width``."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    lo, hi = a.interval.lo, a.interval.hi
    if hi - lo <= width:
        return a
    q = a.coeffs
    slo = _sign(U.evaluate(q, lo))
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = _sign(U.evaluate(q, mid))
        if sm == 0:
            lo = hi = mid
            break
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return AlgebraicNumber(q, IsolatingInterval(lo, hi))


def _raw(g) -> list:
    if isinstance(g, Poly):
        return U.trim(U.from_poly(g))
    return U.trim(g)


def _halve(a: AlgebraicNumber) -> AlgebraicNumber:
    return refine(a, a.interval.width / 2) if a.interval.width else a


def sign_at(g, a: AlgebraicNumber) -> int:
    """Exact sign of the univariate ``g`` at the algebraic number ``a``."""
    raw = _raw(g)
    if not raw:
        return 0
    if a.interval.is_point():
        return _sign(U.evaluate(raw, a.lo))
    h = U.poly_gcd(a.coeffs, raw)
    if len(h) > 1 and U.count_in(h, a.lo, a.hi) > 0:
        return 0
    sq = U.squarefree(raw)
    cur = a
    while U.count_in(sq, cur.lo, cur.hi) > 0:
        cur = _halve(cur)
        if cur.interval.is_point():
            break
    return _sign(U.evaluate(raw, cur.interval.mid))


def compare(a: AlgebraicNumber, b: AlgebraicNumber) -> int:
    """Exact comparison: -1, 0 or 1."""
    if a.hi < b.lo:
        return -1
    if b.hi < a.lo:
        return 1
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    # a shared root of both polynomials in the overlap is a and b at once
    g = U.poly_gcd(a.coeffs, b.coeffs)
    if len(g) > 1 and U.count_in(g, lo, hi) > 0:
        return 0
    while not (a.hi < b.lo or b.hi < a.lo):
        a, b = _halve(a), _halve(b)
    return -1 if a.hi < b.lo else 1


def rational_number(x) -> AlgebraicNumber:
    x = Fraction(x)
    return AlgebraicNumber((-x.numerator, x.denominator), IsolatingInterval(x, x))


def rational_between(a: AlgebraicNumber | None, b: AlgebraicNumber | None) -> Fraction:
    """A rational of small height strictly between ``a`` and ``b``.

    Either side may be ``None`` (unbounded).
    """
    if a is None and b is None:
        return Fraction(0)
    if a is None:
        return Fraction(floor(b.lo) - 1)
    if b is None:
        return Fraction(ceil(a.hi) + 1)
    if compare(a, b) >= 0:
        raise ValueError("need a < b")
    while not a.hi < b.lo:
        a, b = _halve(a), _halve(b)
    return simplest_between(a.hi, b.lo)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A dyadic rational of least denominator in the open interval (lo, hi)."""
    if lo >= hi:
        raise ValueError("empty interval")
    den = 1
    while True:
        cand = Fraction(floor(lo * den) + 1, den)
        if cand < hi:
            return cand
        den *= 2
