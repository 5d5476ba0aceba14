"""Dense univariate integer polynomials: gcd, square-free part, Descartes isolation.

Coefficient lists run from the constant term upwards.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from ..kernel import Poly, PolyRing

Coeffs = List[int]


def trim(a: Sequence) -> list:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def primitive(a: Sequence) -> Coeffs:
    """Integer primitive part with positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    den = 1
    for x in a:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    a = [int(x * den) for x in a]
    g = content(a)
    if a[-1] < 0:
        g = -g
    return [x // g for x in a]


def from_poly(f: Poly) -> Coeffs:
    """Coefficients of a polynomial in (at most) one variable."""
    used = f.used_vars()
    if len(used) > 1:
        raise ValueError(f"{f} is not univariate")
    if f.is_zero():
        return []
    i = f.ring.index(used[0]) if used else 0
    deg = max(m[i] for m in f.terms) if used else 0
    out = [Fraction(0)] * (deg + 1)
    for m, c in f.terms.items():
        out[m[i]] += Fraction(c)
    return [int(c) if c.denominator == 1 else c for c in out]


def to_poly(a: Sequence, ring: PolyRing, var: str) -> Poly:
    i = ring.index(var)
    terms = {}
    for k, c in enumerate(a):
        if c:
            m = [0] * ring.ngens
            m[i] = k
            terms[tuple(m)] = c
    return ring.from_dict(terms)


def degree(a: Sequence) -> int:
    return len(trim(a)) - 1


def derivative(a: Sequence) -> list:
    return [k * a[k] for k in range(1, len(a))]


def evaluate(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _divmod_q(a: Sequence, b: Sequence) -> Tuple[list, list]:
    a = [Fraction(x) for x in trim(a)]
    b = [Fraction(x) for x in trim(b)]
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        t = a[-1] / lb
        q[k] = t
        for i, y in enumerate(b):
            a[i + k] -= t * y
        a = trim(a)
    return trim(q), a


def exact_quotient(a: Sequence, b: Sequence) -> Coeffs:
    q, r = _divmod_q(a, b)
    if r:
        raise ArithmeticError("division is not exact")
    return primitive(q)


def poly_gcd(a: Sequence, b: Sequence) -> Coeffs:
    """Primitive gcd over Q via the Euclidean algorithm on primitive parts."""
    a, b = primitive(a), primitive(b)
    while b:
        _, r = _divmod_q(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def squarefree(a: Sequence) -> Coeffs:
    """a / gcd(a, a') as a primitive integer polynomial."""
    a = primitive(a)
    if not a:
        raise ValueError("square-free part of the zero polynomial")
    if len(a) == 1:
        return [1]
    g = poly_gcd(a, derivative(a))
    return exact_quotient(a, g)


def sign_variations(a: Sequence) -> int:
    count = 0
    last = 0
    for c in a:
        if c:
            if last and (c > 0) != (last > 0):
                count += 1
            last = c
    return count


def taylor_shift1(a: Sequence) -> list:
    """Coefficients of a(x + 1)."""
    a = list(a)
    n = len(a)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            a[k] += a[k + 1]
    return a


def _compose_affine(a: Sequence[int], lo: Fraction, width: Fraction) -> Coeffs:
    """Primitive integer coefficients of a(lo + width * t)."""
    # Horner with polynomials in t over Q, then clear denominators
    acc: list = []
    for c in reversed(a):
        # acc * (lo + width t) + c
        new = [Fraction(0)] * (len(acc) + 1)
        for i, x in enumerate(acc):
            new[i] += x * lo
            new[i + 1] += x * width
        new[0] += c
        acc = new
    return primitive(acc)


def descartes_bound(a: Sequence[int], lo: Fraction, hi: Fraction) -> int:
    """Sign variations bounding the number of roots of a in the open (lo, hi)."""
    b = _compose_affine(a, lo, hi - lo)
    if not b:
        return 0
    # roots of b in (0, 1) <-> positive roots of (1+x)^d b(1/(1+x))
    return sign_variations(taylor_shift1(list(reversed(b))))


def cauchy_bound(a: Sequence) -> Fraction:
    """A power of two strictly above every root modulus."""
    a = trim(a)
    lead = abs(Fraction(a[-1]))
    m = max((abs(Fraction(c)) for c in a[:-1]), default=Fraction(0))
    bound = 1 + m / lead
    p = Fraction(1)
    while p <= bound:
        p *= 2
    return p


def _tighten(a: Sequence[int], lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Shrink an open interval holding one root until neither endpoint is a root."""
    while evaluate(a, lo) == 0 or evaluate(a, hi) == 0:
        mid = (lo + hi) / 2
        if evaluate(a, mid) == 0:
            return mid, mid
        if descartes_bound(a, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


def _bisect(a: Sequence[int], lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Half of an isolating interval (endpoints non-roots) that keeps the root."""
    mid = (lo + hi) / 2
    sm = evaluate(a, mid)
    if sm == 0:
        return mid, mid
    if (sm > 0) == (evaluate(a, lo) > 0):
        return mid, hi
    return lo, mid


def isolate(a: Sequence) -> List[Tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals of the real roots of a square-free ``a``, ascending.

    Exact rational roots come back as degenerate intervals ``(r, r)``; other
    intervals have endpoints that are not roots, so they isolate as closed
    intervals too, and consecutive intervals are strictly separated.
    """
    a = primitive(a)
    if len(a) <= 1:
        return []
    B = cauchy_bound(a)
    out: List[Tuple[Fraction, Fraction]] = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        v = descartes_bound(a, lo, hi)
        if v == 0:
            continue
        if v == 1:
            out.append(_tighten(a, lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(a, mid) == 0:
            out.append((mid, mid))
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    # separate neighbours that share a (non-root) endpoint
    for i in range(len(out) - 1):
        while out[i][1] >= out[i + 1][0]:
            if out[i][0] < out[i][1]:
                out[i] = _bisect(a, *out[i])
            if out[i + 1][0] < out[i + 1][1]:
                out[i + 1] = _bisect(a, *out[i + 1])
    return out


def count_in(a: Sequence, lo: Fraction, hi: Fraction) -> int:
    """Exact number of roots of square-free ``a`` in the closed [lo, hi]."""
    count = sum(1 for x in (lo, hi) if evaluate(a, x) == 0) if lo != hi else int(evaluate(a, lo) == 0)
    if lo == hi:
        return count
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        l, h = stack.pop()
        v = descartes_bound(a, l, h)
        if v <= 1:
            count += v
            continue
        m = (l + h) / 2
        if evaluate(a, m) == 0:
            count += 1
        stack.append((l, m))
        stack.append((m, h))
    return count
