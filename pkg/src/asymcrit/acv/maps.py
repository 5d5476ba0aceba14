"""Dominant polynomial maps, benchmark families and the degree bound."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple

from ..kernel import (
    PolyRing,
    Poly,
    det_fraction_free,
    jacobian,
    kernel_basis_cramer,
    remove_row,
)


@dataclass(frozen=True)
class DominantMap:
    """A polynomial map ``f = (f_1, ..., f_p)`` in the variables ``zvars``."""

    components: Tuple[Poly, ...]
    zvars: Tuple[str, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a map needs at least one component")
        zvars = tuple(self.zvars)
        ring = PolyRing(zvars, comps[0].ring.domain)
        comps = tuple(c.to_ring(ring) for c in comps)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "zvars", zvars)

    @classmethod
    def of(cls, components, zvars: Optional[Sequence[str]] = None) -> "DominantMap":
        if isinstance(components, Poly):
            components = [components]
        components = list(components)
        if zvars is None:
            zvars = components[0].ring.gens
        return cls(tuple(components), tuple(zvars))

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    @property
    def n(self) -> int:
        return len(self.zvars)

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def d(self) -> int:
        return max(c.total_degree() for c in self.components)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def check_dominant(f: DominantMap, trials: int = 3, seed: int = 0) -> bool:
    """Whether the Jacobian of ``f`` has generic rank ``p``.

    A nonzero minor at a random rational point settles the question; only
    when every trial vanishes are the p x p minors expanded symbolically.
    """
    if f.p > f.n:
        return False
    J = jacobian(f.components, f.zvars)
    rng = random.Random(seed)
    for _ in range(trials):
        pt = {z: Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for z in f.zvars}
        vals = [[J[i, k].eval_exact(pt) for k in range(f.n)] for i in range(f.p)]
        if _rank(vals) == f.p:
            return True
    for cols in itertools.combinations(range(f.n), f.p):
        if not det_fraction_free(J.submatrix(range(f.p), cols)).is_zero():
            return True
    return False


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            t = rows[i][col] / rows[rank][col]
            if t:
                rows[i] = [a - t * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def degree_bound(n: int, p: int, d: int) -> int:
    """Degree bound p^(n-p+1) (d-1)^(n-p) (d+1)^p on the ACV hypersurface."""
    if not (1 <= p <= n) or d < 1:
        raise ValueError("need 1 <= p <= n and d >= 1")
    return p ** (n - p + 1) * (d - 1) ** (n - p) * (d + 1) ** p


def kuo_distance_sq(f: DominantMap, x: Mapping[str, object] | Sequence) -> Fraction:
    """Squared Kuo distance min_j |w_j(x)|^2 at a rational point."""
    if not isinstance(x, Mapping):
        x = dict(zip(f.zvars, x))
    x = {k: Fraction(v) for k, v in x.items()}
    J = jacobian(f.components, f.zvars)
    best = None
    for j in range(1, f.p + 1):
        basis, delta = kernel_basis_cramer(remove_row(J, j))
        if delta.eval_exact(x) == 0:
            continue
        grad = [J[j - 1, k].eval_exact(x) for k in range(f.n)]
        total = Fraction(0)
        for vec in basis:
            w = sum((g * e.eval_exact(x) for g, e in zip(grad, vec)), Fraction(0))
            total += w * w
        if best is None or total < best:
            best = total
    if best is None:
        raise ZeroDivisionError("every kernel basis degenerates at this point")
    return best


def zvar_names(n: int) -> Tuple[str, ...]:
    return tuple(f"z{i}" for i in range(1, n + 1))


def make_family(name: str, n: int, d: int | None = None, seed: int = 0) -> DominantMap:
    """Benchmark inputs: ``f``, ``g``, ``m`` families and seeded ``dense`` ones."""
    if n < 2:
        raise ValueError("families need n >= 2")
    zs = zvar_names(n)
    R = PolyRing(zs)
    z = [R.gen(v) for v in zs]
    if name == "f":
        out = z[0] ** 2
        for i in range(1, n):
            out = out + (z[0] * z[i] - 1) ** 2
    elif name == "g":
        out = R.zero
        for i in range(n):
            term = R.one
            for j in range(n):
                if j != i:
                    term = term * z[j] ** 2
            out = out + term
    elif name == "m":
        out = R.zero
        for i in range(1, n + 1):
            term = R.one
            for j in range(1, i + 1):
                term = term * z[j - 1] ** (2 ** (i - j))
            out = out + term
    elif name == "dense":
        if d is None:
            raise ValueError("dense family needs a degree")
        out = dense_polynomial(R, d, seed)
    else:
        raise ValueError(f"unknown family {name!r}")
    return DominantMap((out,), zs)


def dense_polynomial(R: PolyRing, d: int, seed: int, bound: int = 99) -> Poly:
    """Every monomial of degree <= d with a nonzero coefficient in [-bound, bound]."""
    rng = random.Random(seed)
    n = R.ngens
    terms = {}
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(n), deg):
            m = [0] * n
            for i in combo:
                m[i] += 1
            c = 0
            while c == 0:
                c = rng.randint(-bound, bound)
            terms[tuple(m)] = c
    return R.from_dict(terms)
