"""Construction of the per-j polynomial systems G (acv1), G' (acv2) and the KOS lists."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..kernel import (
    Poly,
    PolyRing,
    exact_divide,
    jacobian,
    kernel_numerators,
    remove_row,
    strip_factor,
    substitute_linear,
    tau1_clear,
)
from .maps import DominantMap
from .randomness import Randomness

VARIANTS = ("acv1", "acv2", "kos")


def _fresh(taken, stem: str) -> str:
    name = stem
    k = 0
    while name in taken:
        k += 1
        name = f"{stem}_{k}"
    return name


def value_names(zvars: Sequence[str], p: int) -> Tuple[str, ...]:
    """Names of the value variables: ``c`` for p = 1, ``c1..cp`` otherwise."""
    taken = set(zvars)
    stems = ["c"] if p == 1 else [f"c{i}" for i in range(1, p + 1)]
    out = []
    for s in stems:
        name = _fresh(taken, s)
        taken.add(name)
        out.append(name)
    return tuple(out)


def aux_names(variant: str, zvars: Sequence[str], cvars: Sequence[str], k: int) -> Tuple[str, ...]:
    taken = set(zvars) | set(cvars)
    if variant == "acv1":
        return (_fresh(taken, "e"),)
    if variant == "kos":
        out = []
        for i in range(1, k + 1):
            name = _fresh(taken, f"u{i}")
            taken.add(name)
            out.append(name)
        return tuple(out)
    return ()


@dataclass(frozen=True)
class AcvSystem:
    """Generators for one index j, before saturation.

    ``delta_cleared`` is z1 times the tau_1-cleared Cramer denominator; the
    generators are to be saturated by it.
    """

    j: int
    variant: str
    G: Tuple[Poly, ...]
    delta_cleared: Poly
    ring: PolyRing
    zvars: Tuple[str, ...]
    aux: Tuple[str, ...]
    cvars: Tuple[str, ...]

    @property
    def delta_tau(self) -> Poly:
        """The tau_1-cleared Cramer denominator without the z1 factor."""
        return exact_divide(self.delta_cleared, self.ring.gen(self.zvars[0]))


def transformed_components(f: DominantMap, rnd: Randomness) -> List[Poly]:
    return [substitute_linear(c, rnd.A, f.zvars) for c in f.components]


def build_system(
    f: DominantMap,
    j: int,
    rnd: Randomness,
    variant: str = "acv2",
    fA: Sequence[Poly] | None = None,
) -> AcvSystem:
    """Generators of the variant's system for index ``j`` (1-based)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    if not 1 <= j <= f.p:
        raise IndexError(f"j must lie in 1..{f.p}")
    n, p = f.n, f.p
    zvars = f.zvars
    cvars = value_names(zvars, p)
    k = n - p + 1
    aux = aux_names(variant, zvars, cvars, k)
    ring = PolyRing(zvars + aux + cvars, f.ring.domain)

    if fA is None:
        fA = transformed_components(f, rnd)
    J = jacobian(fA, zvars)
    vecs, delta = kernel_numerators(remove_row(J, j))
    grad = J.row(j - 1)
    # v_i times delta: the Cramer numerators carry the common denominator
    V = []
    for vec in vecs:
        acc = f.ring.zero
        for g, e in zip(grad, vec):
            if not g.is_zero() and not e.is_zero():
                acc = acc + g * e
        V.append(acc.to_ring(ring))
    delta = delta.to_ring(ring)
    z1 = ring.gen(zvars[0])
    delta_tau = tau1_clear(delta, zvars)
    delta_cleared = z1 * delta_tau

    gens: List[Poly] = []
    for i, comp in enumerate(fA):
        gens.append(tau1_clear(comp.to_ring(ring) - ring.gen(cvars[i]), zvars))
    r = rnd.r[j - 1]
    if variant == "acv2":
        for i in range(1, k):
            gens.append(tau1_clear(V[0].scale(r[i]) - V[i].scale(r[0]), zvars))
    elif variant == "acv1":
        e = ring.gen(aux[0])
        for i in range(k):
            gens.append(tau1_clear(z1 * V[i] - (e * delta).scale(r[i]), zvars))
    else:
        for i in range(k):
            u = ring.gen(aux[i])
            gens.append(tau1_clear(z1 * V[i] - u * delta, zvars))
    if not delta_tau.is_constant():
        # factors of the saturating polynomial do not change the saturation
        gens = [strip_factor(g, delta_tau) for g in gens]
    gens = [g.primitive() for g in gens if not g.is_zero()]
    return AcvSystem(j, variant, tuple(gens), delta_cleared, ring, zvars, aux, cvars)
