"""Ideal-level operations built on the Buchberger engine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

from ..kernel.poly import Poly, PolyRing
from .engine import Basis, Budget, Engine, buchberger, reduce_terms
from .orders import MonomialOrder


@dataclass(frozen=True)
class IdealBasis:
    """Finite generator list of an ideal of ``ring``.

    When ``reduced`` is set the generators are the reduced Gröbner basis of
    the ideal with respect to ``order``.
    """

    generators: tuple
    ring: PolyRing
    order: Optional[MonomialOrder] = None
    reduced: bool = False

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero())
        for g in gens:
            if g.ring != self.ring:
                raise ValueError(f"generator {g} is not in {self.ring!r}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, generators: Iterable[Poly], ring: PolyRing | None = None):
        generators = list(generators)
        if ring is None:
            if not generators:
                raise ValueError("cannot infer the ring of an empty generator list")
            ring = generators[0].ring
        return cls(tuple(generators), ring)

    @property
    def ambient(self):
        return self.ring.gens

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"


def default_order(ring: PolyRing) -> MonomialOrder:
    return MonomialOrder.grevlex(ring.gens)


def _engine(ring: PolyRing, order: MonomialOrder) -> Engine:
    return Engine(ring.gens, order, ring.domain.modulus)


def groebner_basis(
    P,
    order: Optional[MonomialOrder] = None,
    budget: Optional[Budget] = None,
) -> IdealBasis:
    """Reduced Gröbner basis of ``P`` (an IdealBasis or list of polynomials)."""
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    ring = P.ring
    order = order or P.order or default_order(ring)
    if P.reduced and P.order == order:
        return P
    eng = _engine(ring, order)
    packed = [eng.encode(g.terms) for g in P.generators]
    gb = buchberger(eng, packed, budget)
    polys = [Poly(ring, eng.decode(ks, cs)) for ks, cs in gb]
    return IdealBasis(tuple(polys), ring, order, True)


def normal_form(f: Poly, G: IdealBasis) -> Poly:
    """Remainder of ``f`` on division by the Gröbner basis ``G``."""
    if not G.reduced:
        G = groebner_basis(G)
    order = G.order or default_order(G.ring)
    eng = _engine(G.ring, order)
    basis = Basis(eng)
    for g in G.generators:
        ks, cs = eng.normalize(*eng.encode(g.terms))
        basis.add(ks, cs, 0)
    f = f.to_ring(G.ring)
    ks, cs = reduce_terms(eng, basis, dict(zip(*eng.encode(f.terms))))
    return Poly(G.ring, eng.decode(ks, cs))


def contains(G: IdealBasis, f: Poly) -> bool:
    return normal_form(f, G).is_zero()


def is_subideal(A, B: IdealBasis) -> bool:
    """Whether every generator of ``A`` lies in the ideal ``B``."""
    gb = groebner_basis(B)
    return all(contains(gb, g) for g in A)


def same_ideal(A: IdealBasis, B: IdealBasis) -> bool:
    return is_subideal(A, B) and is_subideal(B, A)


def _subring(ring: PolyRing, keep: Sequence[str]) -> PolyRing:
    keep = set(keep)
    return ring.with_gens([g for g in ring.gens if g in keep])


def eliminate(
    P,
    drop: Sequence[str],
    keep: Sequence[str] | None = None,
    budget: Optional[Budget] = None,
    keep_order: Optional[MonomialOrder] = None,
) -> IdealBasis:
    """Basis of ``<P> ∩ K[keep]``, returned in the subring on ``keep``."""
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    ring = P.ring
    drop = [v for v in ring.gens if v in set(drop)]
    if keep is None:
        keep = [v for v in ring.gens if v not in set(drop)]
    keep = [v for v in ring.gens if v in set(keep)]
    if set(drop) | set(keep) != set(ring.gens) or set(drop) & set(keep):
        raise ValueError("drop and keep must partition the ambient variables")
    sub = _subring(ring, keep)
    back = keep_order or MonomialOrder.grevlex(keep)
    if not drop:
        gb = groebner_basis(P, back, budget)
        return gb
    order = MonomialOrder.block(drop, back)
    gb = groebner_basis(P, order, budget)
    idx = [ring.index(v) for v in drop]
    kept = [g for g in gb.generators if not any(m[i] for m in g.terms for i in idx)]
    return IdealBasis(tuple(g.to_ring(sub) for g in kept), sub, back, True)


def fresh_name(ring: PolyRing, stem: str) -> str:
    name = stem
    k = 0
    while name in ring:
        k += 1
        name = f"{stem}{k}"
    return name


def saturate_rabinowitsch(P, g: Poly, budget: Optional[Budget] = None) -> IdealBasis:
    """``<P> : <g>^∞`` through a fresh inverse variable."""
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P, g.ring)
    if g.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    ring = P.ring
    ell = fresh_name(ring, "_ell")
    big = ring.with_gens((ell,) + ring.gens)
    gens = [f.to_ring(big) for f in P.generators]
    gens.append(big.gen(ell) * g.to_ring(big) - 1)
    return eliminate(IdealBasis.of(gens, big), [ell], ring.gens, budget)


def homogenize(f: Poly, ring: PolyRing, h: str) -> Poly:
    """Homogenize ``f`` (already in ``ring``) with the variable ``h``."""
    if f.is_zero():
        return f
    d = f.total_degree()
    hi = ring.index(h)
    out = {}
    for m, c in f.terms.items():
        nm = list(m)
        nm[hi] += d - sum(m)
        out[tuple(nm)] = c
    return Poly(ring, out)


def saturate_bayer(P, v: str, budget: Optional[Budget] = None) -> IdealBasis:
    """``<P> : <v>^∞`` for a variable ``v`` by homogenisation.

    The homogenised ideal is taken to a grevlex basis with ``v`` last; every
    element is divided by its largest power of ``v``; the homogenising
    variable is then set to 1.  The result is a generating set (not reduced).
    """
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    ring = P.ring
    if v not in ring:
        raise ValueError(f"{v!r} is not an ambient variable")
    h = fresh_name(ring, "_h")
    others = [x for x in ring.gens if x != v]
    big = ring.with_gens(ring.gens + (h,))
    order = MonomialOrder.grevlex(others + [h, v])
    homog = [homogenize(f.to_ring(big), big, h) for f in P.generators]
    gb = groebner_basis(IdealBasis.of(homog, big), order, budget)
    vi = big.index(v)
    hi = big.index(h)
    out = []
    for g in gb.generators:
        k = min(m[vi] for m in g.terms)
        acc = {}
        for m, c in g.terms.items():
            nm = list(m)
            nm[vi] -= k
            nm[hi] = 0
            t = tuple(nm)
            acc[t] = acc.get(t, 0) + c
        out.append(Poly(big, {m: c for m, c in acc.items() if c}).to_ring(ring))
    return IdealBasis.of(out, ring)


def saturate(P, g: Poly, method: str = "rabinowitsch", budget: Optional[Budget] = None) -> IdealBasis:
    if method == "bayer":
        vars_ = g.used_vars()
        if len(g.terms) != 1 or len(vars_) != 1:
            raise ValueError("Bayer saturation needs a single variable")
        m = next(iter(g.terms))
        if sum(m) != 1:
            # saturating by v^k equals saturating by v
            pass
        return saturate_bayer(P, vars_[0], budget)
    if method == "rabinowitsch":
        return saturate_rabinowitsch(P, g, budget)
    raise ValueError(f"unknown saturation method {method!r}")


def intersect(bases: Sequence[IdealBasis], budget: Optional[Budget] = None) -> IdealBasis:
    """Intersection of ideals, folded pairwise left to right."""
    if not bases:
        raise ValueError("nothing to intersect")
    acc = bases[0]
    ring = acc.ring
    for nxt in bases[1:]:
        t = fresh_name(ring, "_t")
        big = ring.with_gens((t,) + ring.gens)
        tv = big.gen(t)
        gens = [tv * f.to_ring(big) for f in acc.generators]
        gens += [(1 - tv) * f.to_ring(big) for f in nxt.generators]
        if not gens:
            acc = IdealBasis((), ring)
            continue
        acc = eliminate(IdealBasis.of(gens, big), [t], ring.gens, budget)
    if len(bases) == 1:
        acc = groebner_basis(acc, budget=budget)
    return acc


# -- Hilbert series -------------------------------------------------------

def _poly_sub(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _shift(k: int, poly: List[int]) -> List[int]:
    return [0] * k + poly


def hilbert_numerator(monomials: Sequence[Sequence[int]]) -> List[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of K[x]/<monomials>."""
    gens = _minimalize(tuple(m) for m in monomials)
    return _hn(gens)


def _hn(gens) -> List[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    n = len(gens[0])
    # pairwise coprime generators: product of (1 - t^deg)
    support_count = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                support_count[i] += 1
    if max(support_count) <= 1:
        out = [1]
        for g in gens:
            out = _poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        return out
    # pivot x_i^e on the most frequent variable; e is taken from generators
    # that are not pure powers, so the pivot never already lies in the ideal
    i = max(range(n), key=lambda k: support_count[k])
    exps = sorted(g[i] for g in gens if g[i] and sum(g) > g[i])
    e = exps[len(exps) // 2]
    piv = tuple(e if k == i else 0 for k in range(n))
    with_piv = _minimalize(list(gens) + [piv])
    quotient = _minimalize(
        tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens
    )
    a = _hn(with_piv)
    b = _hn(quotient)
    n_out = max(len(a), len(b) + e)
    out = [0] * n_out
    for k, x in enumerate(a):
        out[k] += x
    for k, x in enumerate(b):
        out[k + e] += x
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def degree_from_numerator(num: List[int]) -> int:
    """Divide by (1 - t) while possible and evaluate at 1."""
    num = list(num)
    if not any(num):
        return 0
    while sum(num) == 0:
        # synthetic division by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
    return sum(num)


def ideal_degree(P, budget: Optional[Budget] = None) -> int:
    """Degree read off the Hilbert series of the grevlex leading-term ideal."""
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    order = P.order if (P.reduced and P.order and P.order.is_degree_compatible()) else None
    G = P if order else groebner_basis(P, default_order(P.ring), budget)
    key = G.order.sort_key(G.ring.gens)
    leads = [max(g.terms, key=key) for g in G.generators]
    if not leads:
        return 1
    return degree_from_numerator(hilbert_numerator(leads))


def krull_dimension(P, budget: Optional[Budget] = None) -> int:
    """Dimension of K[x]/P from the Hilbert numerator (-1 for the unit ideal)."""
    if not isinstance(P, IdealBasis):
        P = IdealBasis.of(P)
    G = P if (P.reduced and P.order and P.order.is_degree_compatible()) else groebner_basis(
        P, default_order(P.ring), budget
    )
    key = G.order.sort_key(G.ring.gens)
    leads = [max(g.terms, key=key) for g in G.generators]
    num = hilbert_numerator(leads) if leads else [1]
    if not any(num):
        return -1
    n = G.ring.ngens
    k = 0
    num = list(num)
    while sum(num) == 0:
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        k += 1
    return n - k
