"""Global infimum classification and sample points of {f > 0}."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..acv import DominantMap, Randomness, acv_run, draw_randomness
from ..acv.system import value_names
from ..groebner import Budget, IdealBasis, eliminate
from ..kernel import Poly, PolyRing
from ..realalg import (
    AlgebraicNumber,
    NotZeroDimensionalError,
    RealPoint,
    ShapeError,
    compare,
    interval_eval,
    rational_between,
    rational_number,
    real_roots,
    sign_at,
    squarefree_part,
    zero_dim_real_solve,
)

CRITICAL = "critical"
ASYMPTOTIC = "asymptotic-candidate"
BOTH = "both"


class InconclusiveError(RuntimeError):
    """The fiber oracle could not certify emptiness or non-emptiness."""


class DegenerateEliminationError(ArithmeticError):
    """The critical-value eliminant came out as the zero polynomial."""


def _as_map(f) -> DominantMap:
    if isinstance(f, DominantMap):
        if f.p != 1:
            raise ValueError("applications need a single polynomial")
        return f
    return DominantMap.of(f)


def critical_values_poly(f, budget: Optional[Budget] = None) -> Poly:
    """Generator of <f - c, grad f> ∩ K[c], primitive with positive leading coefficient."""
    fm = _as_map(f)
    g = fm.components[0]
    if g.is_constant():
        raise ValueError("f is constant")
    (c,) = value_names(fm.zvars, 1)
    ring = PolyRing(fm.zvars + (c,), g.ring.domain)
    gens = [g.to_ring(ring) - ring.gen(c)] + [g.diff(z).to_ring(ring) for z in fm.zvars]
    V = eliminate(IdealBasis.of(gens, ring), fm.zvars, (c,), budget)
    if not V.generators:
        raise DegenerateEliminationError(
            f"critical-values elimination degenerate for {g}: basis {list(map(str, gens))}"
        )
    return V.generators[0].primitive()


@dataclass
class GcvReport:
    k0_poly: Poly
    kinf_poly: Poly
    union_roots: List[AlgebraicNumber]
    tags: List[str]
    seed: int = 0
    acv_primes: Tuple[int, ...] = ()
    randomness: Optional[Randomness] = None

    def tagged(self):
        return list(zip(self.union_roots, self.tags))


def _tag(root: AlgebraicNumber, k0: Poly, kinf: Poly) -> str:
    crit = sign_at(k0, root) == 0
    asym = sign_at(kinf, root) == 0
    if crit and asym:
        return BOTH
    return CRITICAL if crit else ASYMPTOTIC


def gcv(f, seed: int = 0, mode: str = "rational", budget: Optional[Budget] = None) -> GcvReport:
    """Critical values (gradient ideal) together with the acv2 superset of K_inf."""
    fm = _as_map(f)
    k0 = critical_values_poly(fm, budget)
    res = acv_run(fm, "acv2", seed=seed, mode=mode, budget=budget)
    kinf = res.univariate()
    kinf = kinf.to_ring(k0.ring)
    union = squarefree_part(k0 * kinf)
    roots = real_roots(union)
    tags = [_tag(r, k0, kinf) for r in roots]
    return GcvReport(k0, kinf, roots, tags, seed, res.primes, res.randomness)


@dataclass
class SampleReport:
    empty: bool
    e: Fraction
    points: List[RealPoint] = field(default_factory=list)

    def boxes(self, width=Fraction(1, 10**10)):
        return [pt.box(width) for pt in self.points]


def distance_critical_system(f: Poly, zvars: Sequence[str], r, a: Sequence) -> List[Poly]:
    """{f - r} and the 2x2 minors of the matrix with rows grad f and z - a."""
    ring = f.ring
    grad = [f.diff(z) for z in zvars]
    diffs = [ring.gen(z) - Fraction(ai) for z, ai in zip(zvars, a)]
    gens = [f - Fraction(r)]
    n = len(zvars)
    for i in range(n):
        for j in range(i + 1, n):
            m = grad[i] * diffs[j] - grad[j] * diffs[i]
            if not m.is_zero():
                gens.append(m)
    return gens


def fiber_sample(f, r, seed: int = 0, budget: Optional[Budget] = None, tries: int = 2) -> SampleReport:
    """Decide whether V_R(f - r) is empty; return certified points otherwise.

    Distance-critical points to a random point ``a`` meet every connected
    component of a smooth real fiber, so an empty real solution set of a
    zero-dimensional system certifies an empty fiber.
    """
    fm = _as_map(f)
    g = fm.components[0]
    r = Fraction(r)
    last = None
    for attempt in range(tries):
        rnd = draw_randomness(fm.n, 1, seed + 7919 * attempt)
        system = distance_critical_system(g, fm.zvars, r, rnd.a)
        try:
            sol = zero_dim_real_solve(IdealBasis.of(system, g.ring), seed=seed + attempt, budget=budget)
        except (ShapeError, NotZeroDimensionalError) as exc:
            last = exc
            continue
        pts = list(sol.points)
        return SampleReport(not pts, r, pts)
    raise InconclusiveError(f"fiber f = {r} of {g}: {last}")


def choose_test_points(roots: Sequence[AlgebraicNumber]) -> List[Fraction]:
    """Rationals r_0 < c_1 < r_1 < ... < c_k < r_k interleaving sorted roots."""
    if not roots:
        return [Fraction(0)]
    pts = [rational_between(None, roots[0])]
    for a, b in zip(roots, roots[1:]):
        pts.append(rational_between(a, b))
    pts.append(rational_between(roots[-1], None))
    return pts


MINIMUM = "MinimumAttained"
AT_INFINITY = "InfimumAtInfinity"
UNBOUNDED = "UnboundedBelow"


@dataclass
class InfimumVerdict:
    kind: str
    value: Optional[AlgebraicNumber]
    witnesses: List[Tuple[Fraction, bool]]
    report: Optional[GcvReport] = None


def infimum(f, seed: int = 0, mode: str = "rational", budget: Optional[Budget] = None) -> InfimumVerdict:
    """Classify inf f over R^n: attained minimum, infimum at infinity, or -inf."""
    fm = _as_map(f)
    rep = gcv(fm, seed, mode, budget)
    roots = rep.union_roots
    tests = choose_test_points(roots)
    witnesses: List[Tuple[Fraction, bool]] = []
    for i, r in enumerate(tests):
        nonempty = not fiber_sample(fm, r, seed, budget).empty
        witnesses.append((r, nonempty))
        if not nonempty:
            continue
        if i == 0:
            return InfimumVerdict(UNBOUNDED, None, witnesses, rep)
        # fibers below r_{i-1} are empty, so inf f lies in (r_{i-1}, r_i): it is c_i
        value = roots[i - 1]
        tag = rep.tags[i - 1]
        kind = AT_INFINITY if tag == ASYMPTOTIC else MINIMUM
        return InfimumVerdict(kind, value, witnesses, rep)
    raise InconclusiveError("no test fiber is nonempty; f has empty image?")


def sample_positive(f, seed: int = 0, mode: str = "rational", budget: Optional[Budget] = None) -> SampleReport:
    """Decide emptiness of {f > 0} and return points on a positive fiber.

    The first level tried lies between 0 and the least positive generalized
    critical value; later levels sit between consecutive positive values.
    """
    fm = _as_map(f)
    rep = gcv(fm, seed, mode, budget)
    zero = rational_number(0)
    positive = [r for r in rep.union_roots if compare(r, zero) > 0]
    levels = []
    levels.append(_between_zero(positive[0]) if positive else Fraction(1))
    for a, b in zip(positive, positive[1:]):
        levels.append(rational_between(a, b))
    if positive:
        levels.append(rational_between(positive[-1], None))
    last = None
    for e in levels:
        rep_e = fiber_sample(fm, e, seed, budget)
        last = rep_e
        if not rep_e.empty:
            return rep_e
    return last


def _between_zero(root: AlgebraicNumber) -> Fraction:
    """Midpoint of (0, lower end of the root's interval), tightening until positive."""
    a = root
    while a.lo <= 0:
        a = a.refine(a.interval.width / 2)
    return a.lo / 2


def certify_level(f, point: RealPoint, level, width=Fraction(1, 10**10)) -> bool:
    """Interval check that f(point) = level within the refined box."""
    fm = _as_map(f)
    box = point.box(width)
    lo, hi = interval_eval(fm.components[0], box)
    return lo <= Fraction(level) <= hi
