"""Real solutions of zero-dimensional systems through a shape-position parametrization.

A grevlex basis gives the quotient algebra; the minimal polynomial of a random
linear form and the coordinates written as polynomials in it come from exact
linear algebra on normal forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..groebner import Budget, IdealBasis, MonomialOrder, groebner_basis, normal_form
from ..kernel import Poly, PolyRing
from . import univariate as U
from .algebraic import AlgebraicNumber, real_roots, refine

Interval = Tuple[Fraction, Fraction]


class ShapeError(RuntimeError):
    """No separating linear form was found, or a lifted point failed its check."""


class NotZeroDimensionalError(ValueError):
    """The ideal has no univariate eliminant in the last variable."""


# -- interval arithmetic --------------------------------------------------

def _imul(a: Interval, b: Interval) -> Interval:
    p = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(p), max(p)


def _ipow(a: Interval, k: int) -> Interval:
    if k == 0:
        return (Fraction(1), Fraction(1))
    lo, hi = a[0] ** k, a[1] ** k
    if k % 2 == 0:
        if a[0] <= 0 <= a[1]:
            return Fraction(0), max(lo, hi)
        return min(lo, hi), max(lo, hi)
    return lo, hi


def interval_eval(f: Poly, box: Dict[str, Interval]) -> Interval:
    """Enclosure of f over a box of rational intervals (one per used variable)."""
    gens = f.ring.gens
    lo = hi = Fraction(0)
    for m, c in f.terms.items():
        t = (Fraction(c), Fraction(c))
        for i, e in enumerate(m):
            if e:
                t = _imul(t, _ipow(box[gens[i]], e))
        lo += t[0]
        hi += t[1]
    return lo, hi


def _univariate_interval(a: Sequence, iv: Interval) -> Interval:
    acc = (Fraction(0), Fraction(0))
    for c in reversed(list(a)):
        acc = _imul(acc, iv)
        acc = (acc[0] + c, acc[1] + c)
    return acc


# -- points ---------------------------------------------------------------

@dataclass(frozen=True)
class RealPoint:
    """A real solution: coordinates are rational polynomials of one algebraic number."""

    vars: Tuple[str, ...]
    root: AlgebraicNumber
    coords: Tuple[Tuple[Fraction, ...], ...]  # dense univariate lifts, constant first

    def box(self, width) -> Dict[str, Interval]:
        """Rational intervals of width <= ``width`` around each coordinate."""
        width = Fraction(width)
        w = width
        while True:
            a = refine(self.root, w) if self.root.interval.width > w else self.root
            iv = (a.lo, a.hi)
            out = {v: _univariate_interval(c, iv) for v, c in zip(self.vars, self.coords)}
            if all(hi - lo <= width for lo, hi in out.values()):
                object.__setattr__(self, "root", a)
                return out
            w /= 16

    def approx(self) -> Tuple[float, ...]:
        b = self.box(Fraction(1, 10**12))
        return tuple(float((lo + hi) / 2) for lo, hi in (b[v] for v in self.vars))


@dataclass
class RealSolutionSet:
    eliminant: Poly
    lifts: Dict[str, Poly]
    roots: List[AlgebraicNumber]
    points: List[RealPoint] = field(default_factory=list)
    change: Tuple[int, ...] = ()


def _standard_monomials(leads: Sequence[Tuple[int, ...]], n: int) -> Optional[List[Tuple[int, ...]]]:
    """Monomials outside the lead-term ideal, or None when there are infinitely many."""
    for i in range(n):
        if not any(m[i] and sum(m) == m[i] for m in leads):
            return None

    def divisible(m):
        return any(all(a >= b for a, b in zip(m, l)) for l in leads)

    out = []
    seen = {(0,) * n}
    todo = [(0,) * n]
    while todo:
        m = todo.pop()
        if divisible(m):
            continue
        out.append(m)
        for i in range(n):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return sorted(out)


class _Echelon:
    """Incremental row echelon form remembering how each row combines the inputs."""

    def __init__(self, size: int):
        self.size = size
        self.rows: List[Tuple[int, Dict[int, Fraction], Dict[int, Fraction]]] = []

    def reduce(self, vec: Dict[int, Fraction]) -> Tuple[Dict[int, Fraction], Dict[int, Fraction]]:
        """Remainder of ``vec`` and the combination of stored inputs subtracted."""
        vec = dict(vec)
        combo: Dict[int, Fraction] = {}
        for piv, row, rc in self.rows:
            c = vec.get(piv)
            if not c:
                continue
            for k, x in row.items():
                y = vec.get(k, 0) - c * x
                if y:
                    vec[k] = y
                else:
                    vec.pop(k, None)
            for k, x in rc.items():
                combo[k] = combo.get(k, 0) + c * x
        return vec, combo

    def add(self, vec: Dict[int, Fraction], combo: Dict[int, Fraction], label: int) -> None:
        # vec = input[label] - sum combo[k] * input[k]
        piv = min(vec)
        inv = 1 / vec[piv]
        row = {k: x * inv for k, x in vec.items()}
        rc = {k: -x * inv for k, x in combo.items()}
        rc[label] = rc.get(label, 0) + inv
        # keep earlier rows reduced at the new pivot
        new_rows = []
        for p2, r2, c2 in self.rows:
            c = r2.get(piv)
            if c:
                r2 = dict(r2)
                c2 = dict(c2)
                for k, x in row.items():
                    y = r2.get(k, 0) - c * x
                    if y:
                        r2[k] = y
                    else:
                        r2.pop(k, None)
                for k, x in rc.items():
                    c2[k] = c2.get(k, 0) - c * x
            new_rows.append((p2, r2, c2))
        new_rows.append((piv, row, rc))
        self.rows = new_rows


def _vector(f: Poly, index: Dict[Tuple[int, ...], int]) -> Dict[int, Fraction]:
    return {index[m]: Fraction(c) for m, c in f.terms.items() if c}


def _minimal_polynomial(gb: IdealBasis, elem: Poly, std, index):
    """Monic minimal polynomial of ``elem`` in the quotient algebra, with its echelon."""
    ech = _Echelon(len(std))
    power = gb.ring.one
    for k in range(len(std) + 1):
        vec, combo = ech.reduce(_vector(power, index))
        if not vec:
            # power_k = sum combo[j] power_j
            return [-combo.get(j, Fraction(0)) for j in range(k)] + [Fraction(1)], ech
        ech.add(vec, combo, k)
        power = normal_form(power * elem, gb)
    raise AssertionError("minimal polynomial degree exceeds the quotient dimension")


def _quotient(gb: IdealBasis):
    leads = [g.leading_term()[0] for g in gb.generators]
    std = _standard_monomials(leads, gb.ring.ngens)
    if std is None:
        raise NotZeroDimensionalError("the ideal has positive dimension")
    return std, {m: i for i, m in enumerate(std)}


def _quotient_shape(gb: IdealBasis, form: Poly):
    """Minimal polynomial of ``form`` and every variable as a polynomial in it.

    Returns ``(q, lifts)`` with ``q`` monic dense coefficients; ``lifts`` is
    None when the powers of ``form`` do not span the quotient algebra.
    """
    std, index = _quotient(gb)
    q, ech = _minimal_polynomial(gb, form, std, index)
    m = len(q) - 1
    if m < len(std):
        return q, None
    lifts = {}
    for x in gb.ring.gens:
        _, combo = ech.reduce(_vector(normal_form(gb.ring.gen(x), gb), index))
        lifts[x] = tuple(combo.get(j, Fraction(0)) for j in range(m))
    return q, lifts


def _univariate_in(coeffs, elem: Poly) -> Poly:
    ring = elem.ring
    return sum(((elem ** k).scale(c) for k, c in enumerate(coeffs) if c), ring.zero)


def _radical(gb: IdealBasis, order, budget) -> IdealBasis:
    """Zero-dimensional radical: add the square-free part of each coordinate's minimal polynomial."""
    std, index = _quotient(gb)
    extra = []
    for x in gb.ring.gens:
        q, _ = _minimal_polynomial(gb, gb.ring.gen(x), std, index)
        sq = U.squarefree(U.primitive(q))
        if len(sq) < len(U.primitive(q)):
            extra.append(_univariate_in(sq, gb.ring.gen(x)))
    if not extra:
        return gb
    return groebner_basis(IdealBasis.of(list(gb.generators) + extra, gb.ring), order, budget)


def zero_dim_real_solve(
    P,
    seed: int = 0,
    budget: Optional[Budget] = None,
    retries: int = 1,
    check_width: Fraction = Fraction(1, 10**20),
) -> RealSolutionSet:
    """Real points of a zero-dimensional ideal.

    A random form ``t = x_n + sum a_i x_i`` must separate the points; each
    coordinate is then ``x_i = g_i(t)`` with ``t`` a root of the square-free
    minimal polynomial ``q`` of the form in the quotient algebra.
    Every lifted point is checked by interval evaluation of the input.
    """
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    ring = P.ring
    xs = ring.gens
    n = len(xs)
    rng = random.Random(seed)
    for attempt in range(retries + 1):
        if n == 1:
            change = ()
        else:
            span = 3 + 4 * attempt
            change = tuple(rng.choice([k for k in range(-span, span + 1) if k]) for _ in range(n - 1))
        result = _solve_with(P, change, budget)
        if result is not None:
            for pt in result.points:
                box = pt.box(check_width)
                for g in P.generators:
                    lo, hi = interval_eval(g, box)
                    if not (lo <= 0 <= hi):
                        raise ShapeError(f"lifted point fails the residual check on {g}")
            return result
    raise ShapeError("no shape position after retrying with fresh coordinates")


def _solve_with(P: IdealBasis, change: Tuple[int, ...], budget) -> Optional[RealSolutionSet]:
    ring = P.ring
    xs = ring.gens
    form = ring.gen(xs[-1])
    for i in range(len(xs) - 1):
        form = form + ring.gen(xs[i]).scale(change[i])
    order = MonomialOrder.grevlex(xs)
    gb = groebner_basis(IdealBasis.of(list(P.generators), ring), order, budget)
    tring = PolyRing(("_t",), ring.domain)
    if gb.is_unit():
        return RealSolutionSet(tring.one, {}, [], [], change)
    q, lifts = _quotient_shape(gb, form)
    if lifts is None:
        # multiplicities hide the separation; pass to the radical and try again
        gb = _radical(gb, order, budget)
        q, lifts = _quotient_shape(gb, form)
        if lifts is None:
            return None
    qc = U.squarefree(U.primitive(q))
    roots = real_roots(qc)
    points = [RealPoint(xs, r, tuple(lifts[x] for x in xs)) for r in roots]
    q_out = U.to_poly(qc, tring, "_t")
    lift_polys = {x: U.to_poly(list(lifts[x]), tring, "_t") for x in xs}
    return RealSolutionSet(q_out, lift_polys, roots, points, change)
