"""Buchberger's algorithm on packed monomials.

Polynomials inside the engine are pairs of parallel lists ``(keys, coeffs)``
sorted by decreasing key, kept monic.  ``p == 0`` selects rational arithmetic
(coefficients are ints/Fractions); otherwise coefficients live in GF(p).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .orders import FIELD, MonomialOrder


class ResourceLimitError(RuntimeError):
    """A Gröbner run exceeded its pair or coefficient-size budget."""


class Budget:
    """Limits shared by the Gröbner runs of one job."""

    def __init__(self, max_pairs: int = 10**6, max_coeff_bits: int = 1 << 16):
        self.max_pairs = max_pairs
        self.max_coeff_bits = max_coeff_bits
        self.pairs_processed = 0

    def charge(self):
        self.pairs_processed += 1
        if self.pairs_processed > self.max_pairs:
            raise ResourceLimitError(
                f"S-pair budget of {self.max_pairs} exhausted"
            )


DEFAULT_BUDGET_PAIRS = 10**6


class Engine:
    """Packs monomials for one (ambient, order, field) triple."""

    def __init__(self, ambient: Sequence[str], order: MonomialOrder, p: int):
        self.ambient = tuple(ambient)
        self.n = len(self.ambient)
        self.order = order
        self.p = p
        self.weights = order.weights(self.ambient)
        self.shift = FIELD * self.n
        self.pmask = (1 << self.shift) - 1
        self.guard = sum(1 << (FIELD * i + FIELD - 1) for i in range(self.n))
        self.fmask = (1 << FIELD) - 1

    # -- packing -------------------------------------------------------
    def pack(self, m: Tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(m, self.weights) if e)

    def unpack(self, k: int) -> Tuple[int, ...]:
        P = k & self.pmask
        f = self.fmask
        return tuple((P >> (FIELD * i)) & f for i in range(self.n))

    def degree(self, k: int) -> int:
        P = k & self.pmask
        f = self.fmask
        d = 0
        while P:
            d += P & f
            P >>= FIELD
        return d

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        m = self.pmask
        return ((b & m) + g - (a & m)) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(x if x > y else y for x, y in zip(ea, eb)))

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return not any(x and y for x, y in zip(ea, eb))

    def encode(self, terms: Dict[Tuple[int, ...], object]):
        pairs = sorted(((self.pack(m), c) for m, c in terms.items()), reverse=True)
        return [k for k, _ in pairs], [c for _, c in pairs]

    def decode(self, ks: Sequence[int], cs: Sequence) -> Dict[Tuple[int, ...], object]:
        return {self.unpack(k): c for k, c in zip(ks, cs)}

    # -- coefficient helpers ------------------------------------------
    def normalize(self, ks, cs):
        """Make monic (rational case: keep Fractions exact)."""
        if not ks:
            return ks, cs
        lc = cs[0]
        if lc == 1:
            return ks, cs
        p = self.p
        if p:
            inv = pow(lc, -1, p)
            return ks, [c * inv % p for c in cs]
        inv = Fraction(1) / lc
        return ks, [_qq(c * inv) for c in cs]


def _qq(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Basis:
    """A growing list of monic reducers with a divisor-lookup cache."""

    def __init__(self, eng: Engine):
        self.eng = eng
        self.polys: List[Tuple[List[int], List]] = []
        self.sugar: List[int] = []
        self.leads: List[int] = []  # P part of leading monomial
        self._hit: Dict[int, int] = {}
        self._miss: Dict[int, int] = {}

    def add(self, ks, cs, sugar) -> int:
        self.polys.append((ks, cs))
        self.sugar.append(sugar)
        self.leads.append(ks[0] & self.eng.pmask)
        return len(self.polys) - 1

    def find(self, k: int) -> Optional[int]:
        idx = self._hit.get(k)
        if idx is not None:
            return idx
        start = self._miss.get(k, 0)
        leads = self.leads
        nl = len(leads)
        if start == nl:
            return None
        eng = self.eng
        g = eng.guard
        D = (k & eng.pmask) + g
        for i in range(start, nl):
            if (D - leads[i]) & g == g:
                self._hit[k] = i
                return i
        self._miss[k] = nl
        return None



def reduce_terms(eng: Engine, basis: Basis, acc: Dict[int, object], full: bool = True):
    """Normal form of the polynomial held in ``acc`` (consumed) w.r.t. ``basis``.

    Returns sorted ``(keys, coeffs)``.  With ``full=False`` only the leading
    term is reduced.
    """
    p = eng.p
    heap = [-k for k in acc]
    heapq.heapify(heap)
    heappop = heapq.heappop
    heappush = heapq.heappush
    out_k: List[int] = []
    out_c: List = []
    polys = basis.polys
    find = basis.find
    get = acc.get
    while heap:
        k = -heappop(heap)
        c = acc.pop(k, None)
        if c is None:
            continue
        r = find(k)
        if r is None:
            out_k.append(k)
            out_c.append(c)
            if not full:
                rest = sorted(acc.items(), reverse=True)
                out_k.extend(x for x, _ in rest)
                out_c.extend(y for _, y in rest)
                return out_k, out_c
            continue
        gks, gcs = polys[r]
        shift = k - gks[0]
        if p:
            for i in range(1, len(gks)):
                t = gks[i] + shift
                v = get(t)
                if v is None:
                    acc[t] = (-c * gcs[i]) % p
                    heappush(heap, -t)
                else:
                    v = (v - c * gcs[i]) % p
                    if v:
                        acc[t] = v
                    else:
                        del acc[t]
        else:
            for i in range(1, len(gks)):
                t = gks[i] + shift
                v = get(t)
                if v is None:
                    acc[t] = _qq(-c * gcs[i])
                    heappush(heap, -t)
                else:
                    v = _qq(v - c * gcs[i])
                    if v:
                        acc[t] = v
                    else:
                        del acc[t]
    return out_k, out_c


def _coeff_bits(cs) -> int:
    best = 0
    for c in cs:
        if type(c) is Fraction:
            b = max(c.numerator.bit_length(), c.denominator.bit_length())
        else:
            b = int(c).bit_length()
        if b > best:
            best = b
    return best


def buchberger(
    eng: Engine,
    polys: Sequence[Tuple[List[int], List]],
    budget: Optional[Budget] = None,
) -> List[Tuple[List[int], List]]:
    """Reduced Gröbner basis of the packed input polynomials."""
    budget = budget or Budget()
    basis = Basis(eng)
    p = eng.p
    # inputs: make monic, drop zeros, sort by leading key for determinism
    work = []
    for ks, cs in polys:
        if ks:
            ks, cs = eng.normalize(list(ks), list(cs))
            work.append((ks, cs))
    work.sort(key=lambda t: (t[0][0], t[0], [str(c) for c in t[1]]))

    pairs: List[Tuple[int, int, int, int]] = []  # (sugar, lcm, i, j) heap
    active: List[int] = []

    def insert(ks, cs, sugar):
        h = basis.add(ks, cs, sugar)
        _update(eng, basis, active, pairs, h)

    for ks, cs in work:
        acc = dict(zip(ks, cs))
        sugar = max(eng.degree(k) for k in ks)
        rks, rcs = reduce_terms(eng, basis, acc)
        if not rks:
            continue
        rks, rcs = eng.normalize(rks, rcs)
        if eng.degree(rks[0]) == 0:
            return [([rks[0]], [1])]
        insert(rks, rcs, sugar)

    while pairs:
        sugar, lcm, i, j = heapq.heappop(pairs)
        budget.charge()
        gi_k, gi_c = basis.polys[i]
        gj_k, gj_c = basis.polys[j]
        si = lcm - gi_k[0]
        sj = lcm - gj_k[0]
        acc: Dict[int, object] = {}
        for t, c in zip(gi_k[1:], gi_c[1:]):
            acc[si + t] = c
        if p:
            for t, c in zip(gj_k[1:], gj_c[1:]):
                key = sj + t
                v = (acc.get(key, 0) - c) % p
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        else:
            for t, c in zip(gj_k[1:], gj_c[1:]):
                key = sj + t
                v = _qq(acc.get(key, 0) - c)
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        if not acc:
            continue
        rks, rcs = reduce_terms(eng, basis, acc)
        if not rks:
            continue
        rks, rcs = eng.normalize(rks, rcs)
        if not p and _coeff_bits(rcs) > budget.max_coeff_bits:
            raise ResourceLimitError(
                f"coefficient size exceeded {budget.max_coeff_bits} bits"
            )
        if eng.degree(rks[0]) == 0:
            return [([rks[0]], [1])]
        insert(rks, rcs, sugar)

    return _interreduce(eng, basis, active)


def _update(eng: Engine, basis: Basis, active: List[int], pairs, h: int):
    """Gebauer-Moller installation of ``h`` into the pair set and active basis."""
    polys = basis.polys
    lh = polys[h][0][0]
    sug_h = basis.sugar[h]
    deg_lh = eng.degree(lh)
    cand = [(g, eng.lcm(lh, polys[g][0][0])) for g in active]
    chosen = []
    for idx, (g, lcm) in enumerate(cand):
        if eng.coprime(lh, polys[g][0][0]):
            chosen.append((g, lcm, True))
            continue
        later = any(eng.divides(l2, lcm) for _, l2 in cand[idx + 1:])
        earlier = any(eng.divides(l2, lcm) for _, l2, _ in chosen)
        if not (later or earlier):
            chosen.append((g, lcm, False))
    new_pairs = [(g, lcm) for g, lcm, cop in chosen if not cop]

    if pairs:
        kept = []
        for entry in pairs:
            _, lcm, i, j = entry
            if eng.divides(lh, lcm):
                if eng.lcm(polys[i][0][0], lh) != lcm and eng.lcm(polys[j][0][0], lh) != lcm:
                    continue
            kept.append(entry)
        if len(kept) != len(pairs):
            pairs[:] = kept
            heapq.heapify(pairs)

    dl = eng.degree
    for g, lcm in new_pairs:
        lg = polys[g][0][0]
        d = dl(lcm)
        sug = max(sug_h + d - deg_lh, basis.sugar[g] + d - dl(lg))
        heapq.heappush(pairs, (sug, lcm, g, h))

    active[:] = [g for g in active if not eng.divides(lh, polys[g][0][0])] + [h]


def _interreduce(eng: Engine, basis: Basis, active: List[int]):
    polys = basis.polys
    minimal = []
    for k, i in sorted((polys[i][0][0], i) for i in active):
        if not any(eng.divides(k2, k) for k2, _ in minimal):
            minimal.append((k, i))
    red = Basis(eng)
    for _, i in minimal:
        red.add(*polys[i], basis.sugar[i])
    out = []
    for _, i in minimal:
        ks, cs = polys[i]
        # tails are below the lead, so the element cannot reduce itself
        tk, tc = reduce_terms(eng, red, dict(zip(ks[1:], cs[1:])))
        out.append(([ks[0]] + tk, [cs[0]] + tc))
    out.sort(key=lambda t: t[0][0])
    return out
