"""The ACV algorithms: saturate, specialise at z1 = 0, eliminate, intersect."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..groebner import Budget, IdealBasis, eliminate, groebner_basis, intersect
from ..groebner.ideals import saturate_bayer, saturate_rabinowitsch
from ..kernel import (
    GF,
    QQ,
    DegenerateBlockError,
    Poly,
    PolyRing,
    ReconstructionError,
    crt_combine,
    primes_descending,
)
from ..kernel.modular import reconstruct_poly
from ..realalg import squarefree_part
from .maps import DominantMap, check_dominant
from .randomness import Randomness, draw_randomness
from .system import AcvSystem, build_system, transformed_components, value_names

log = logging.getLogger(__name__)

SATURATIONS = ("auto", "bayer", "rabinowitsch")


class EmptyOutputError(RuntimeError):
    """Every output generator vanished; the input is not dominant or a draw was unlucky."""


class NotDominantError(ValueError):
    pass


@dataclass
class AcvResult:
    """Polynomials in the value variables whose zero set contains K_inf(f)."""

    generators: Tuple[Poly, ...]
    algorithm: str
    randomness: Randomness
    cvars: Tuple[str, ...]
    per_j: List[IdealBasis] = field(default_factory=list)
    primes: Tuple[int, ...] = ()
    systems: List[AcvSystem] = field(default_factory=list)

    @property
    def ring(self) -> PolyRing:
        return self.generators[0].ring

    def degree(self) -> int:
        """Total degree of the output; 0 for a nonzero constant."""
        return max(g.total_degree() for g in self.generators)

    def is_empty_set(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def univariate(self, squarefree: bool = False) -> Poly:
        """The single output polynomial for p = 1, optionally made square-free."""
        if len(self.generators) != 1 or len(self.cvars) != 1:
            raise ValueError("output is not a single univariate polynomial")
        g = self.generators[0]
        if squarefree and not g.is_constant():
            g = squarefree_part(g)
        return g


def _strategy(sat: str, system: AcvSystem) -> str:
    if sat == "auto":
        return "bayer" if system.delta_tau.is_constant() else "rabinowitsch"
    return sat


def solve_index(
    system: AcvSystem,
    domain=QQ,
    sat: str = "auto",
    budget: Optional[Budget] = None,
) -> IdealBasis:
    """V_j: saturate, adjoin z1 (and e or u), eliminate everything but c."""
    ring = system.ring.with_domain(domain)
    gens = [g.to_ring(ring) for g in system.G]
    z1 = system.zvars[0]
    method = _strategy(sat, system)
    delta_tau = system.delta_tau.to_ring(ring)
    if method == "bayer":
        sat_basis = saturate_bayer(IdealBasis.of(gens, ring), z1, budget)
        if not delta_tau.is_constant():
            sat_basis = saturate_rabinowitsch(sat_basis, delta_tau, budget)
    elif method == "rabinowitsch":
        sat_basis = saturate_rabinowitsch(
            IdealBasis.of(gens, ring), system.delta_cleared.to_ring(ring), budget
        )
    else:
        raise ValueError(f"unknown saturation strategy {method!r}")
    # adjoining z1, e, u is the same as setting them to zero
    zero = {v: 0 for v in (z1,) + system.aux}
    rest = [v for v in ring.gens if v not in zero]
    sub = ring.with_gens(rest)
    spec = [g.evaluate(zero).to_ring(sub) for g in sat_basis.generators]
    spec = [g for g in spec if not g.is_zero()]
    drop = [v for v in rest if v not in system.cvars]
    if not spec:
        return IdealBasis((), sub.with_gens(system.cvars))
    return eliminate(IdealBasis.of(spec, sub), drop, system.cvars, budget)


def _run_over(
    f: DominantMap,
    systems: Sequence[AcvSystem],
    domain,
    sat: str,
    budget: Optional[Budget],
) -> Tuple[IdealBasis, List[IdealBasis]]:
    per_j = [solve_index(s, domain, sat, budget) for s in systems]
    cring = per_j[0].ring
    if len(per_j) == 1:
        out = groebner_basis(per_j[0], budget=budget) if per_j[0].generators else per_j[0]
    else:
        if any(not V.generators for V in per_j):
            nonzero = [V for V in per_j if V.generators]
            out = IdealBasis((), cring) if len(nonzero) < len(per_j) else intersect(per_j, budget)
        else:
            out = intersect(per_j, budget)
    return out, per_j


def _normalize(gens: Sequence[Poly]) -> Tuple[Poly, ...]:
    out = sorted((g.primitive() for g in gens if not g.is_zero()), key=lambda g: str(g))
    return tuple(out)


def _signature(basis: IdealBasis):
    key = basis.order.sort_key(basis.ring.gens) if basis.order else None
    return tuple(sorted(tuple(sorted(g.terms, key=key)) for g in basis.generators))


def _reconstruct(images: List[Tuple[IdealBasis, int]], ring: PolyRing) -> Tuple[Poly, ...]:
    """CRT + rational reconstruction of reduced-basis images sharing a support."""
    count = len(images[0][0].generators)
    out = []
    for idx in range(count):
        residues = [(img.generators[idx], p) for img, p in images]
        residues = [(Poly(g.ring, {m: int(c) for m, c in g.terms.items()}), p) for g, p in residues]
        coeffs, M = crt_combine(residues)
        out.append(reconstruct_poly(coeffs, M, ring))
    return tuple(out)


def _sorted_basis(basis: IdealBasis) -> IdealBasis:
    key = basis.order.sort_key(basis.ring.gens)
    gens = sorted(basis.generators, key=lambda g: key(max(g.terms, key=key)))
    return IdealBasis(tuple(gens), basis.ring, basis.order, basis.reduced)


def _matches(cand: Sequence[Poly], image: IdealBasis, p: int) -> bool:
    try:
        red = [g.to_ring(image.ring) for g in cand]
    except ZeroDivisionError:
        return False
    monic = sorted(str(g.monic()) for g in red if not g.is_zero())
    return monic == sorted(str(g) for g in image.generators)


def acv_run(
    f: DominantMap,
    variant: str = "acv2",
    rnd: Optional[Randomness] = None,
    *,
    seed: int = 0,
    sat: str = "auto",
    mode: str = "rational",
    primes: int = 2,
    max_primes: int = 40,
    budget: Optional[Budget] = None,
    redraw: bool = True,
    check: bool = True,
) -> AcvResult:
    """Run acv1, acv2 or the KOS baseline on ``f``.

    In modular mode every prime gives the reduced basis of the output ideal
    over GF(prime); images are combined by CRT, rationally reconstructed and
    the result is confirmed against one further prime.
    """
    if check and not check_dominant(f):
        raise NotDominantError(f"{f} is not dominant")
    if sat not in SATURATIONS:
        raise ValueError(f"unknown saturation strategy {sat!r}")
    if rnd is None:
        rnd = draw_randomness(f.n, f.p, seed)
    try:
        return _acv_once(f, variant, rnd, sat, mode, primes, max_primes, budget)
    except (DegenerateBlockError, EmptyOutputError) as exc:
        if not redraw:
            raise
        log.info("redrawing randomness after %s", exc)
        rnd = draw_randomness(f.n, f.p, (rnd.seed * 6364136223846793005 + 1442695040888963407) % 2**64)
        return _acv_once(f, variant, rnd, sat, mode, primes, max_primes, budget)


def _acv_once(f, variant, rnd, sat, mode, nprimes, max_primes, budget) -> AcvResult:
    fA = transformed_components(f, rnd)
    systems = [build_system(f, j, rnd, variant, fA) for j in range(1, f.p + 1)]
    cvars = value_names(f.zvars, f.p)
    cring = PolyRing(cvars, QQ)
    if mode == "rational":
        out, per_j = _run_over(f, systems, QQ, sat, budget)
        gens = _normalize(out.generators)
        used: Tuple[int, ...] = ()
    elif mode == "modular":
        gens, per_j, used = _modular(f, systems, sat, budget, nprimes, max_primes, cring)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not gens:
        raise EmptyOutputError("all output generators vanished")
    gens = tuple(g.to_ring(cring) for g in gens)
    return AcvResult(gens, variant, rnd, cvars, per_j, used, systems)


def _modular(f, systems, sat, budget, nprimes, max_primes, cring):
    images: List[Tuple[IdealBasis, int]] = []
    stream = primes_descending()
    used: List[int] = []
    per_j_last = []
    candidate = None
    while len(used) < max_primes:
        p = next(stream)
        try:
            out, per_j = _run_over(f, [_reduce_system(s, p) for s in systems], GF(p), sat, budget)
        except (ZeroDivisionError, DegenerateBlockError):
            continue
        used.append(p)
        per_j_last = per_j
        out = _sorted_basis(out) if out.generators else out
        if candidate is not None and len(images) >= nprimes:
            if _matches(candidate, out, p):
                return candidate, per_j_last, tuple(used)
        images.append((out, p))
        # keep only images whose support agrees with the majority
        sigs = Counter(_signature(img) for img, _ in images)
        best = max(sigs.values())
        top = [s for s, k in sigs.items() if k == best]
        # ties go to the larger support, which unlucky primes tend to shrink
        sig = max(top, key=lambda s: (sum(len(t) for t in s), len(s)))
        good = [(img, q) for img, q in images if _signature(img) == sig]
        if len(good) < nprimes:
            continue
        if not good[0][0].generators:
            candidate = ()
            continue
        try:
            candidate = _normalize(_reconstruct(good, cring))
        except ReconstructionError:
            candidate = None
    raise ReconstructionError(f"no stable reconstruction after {len(used)} primes")


def _reduce_system(system: AcvSystem, p: int) -> AcvSystem:
    """Check that every coefficient denominator is a unit mod ``p``."""
    for g in system.G + (system.delta_cleared,):
        for c in g.terms.values():
            den = getattr(c, "denominator", 1)
            if den % p == 0:
                raise ZeroDivisionError(f"{p} divides a denominator")
    lead = system.delta_cleared.primitive()
    if all(int(c) % p == 0 for c in lead.terms.values()):
        raise DegenerateBlockError("saturating polynomial vanishes modulo p")
    return system
