"""Sparse multivariate polynomials over QQ or GF(p).

A polynomial is a map from exponent tuples to nonzero coefficients, tied to a
:class:`PolyRing` that fixes the variable names and the coefficient domain.
Polynomials are immutable once built.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .domains import QQ, Domain, Number, PrimeField

Monomial = Tuple[int, ...]


def grevlex_key(m: Monomial):
    """Sort key realising grevlex with the first variable largest."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


class PolyRing:
    """Ordered variable names plus a coefficient domain."""

    __slots__ = ("gens", "domain", "_index")

    def __init__(self, gens: Sequence[str], domain: Domain = QQ):
        gens = tuple(gens)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate variable names in {gens}")
        self.gens = gens
        self.domain = domain
        self._index = {g: i for i, g in enumerate(gens)}

    @property
    def ngens(self) -> int:
        return len(self.gens)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def gen(self, name: str) -> "Poly":
        i = self.index(name)
        m = [0] * self.ngens
        m[i] = 1
        return Poly(self, {tuple(m): 1})

    def vars(self, *names: str):
        return tuple(self.gen(n) for n in names)

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.domain.convert(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.ngens: c})

    def monomial(self, exps: Monomial, coeff=1) -> "Poly":
        return self.from_dict({tuple(exps): coeff})

    def from_dict(self, terms: Mapping[Monomial, object]) -> "Poly":
        dom = self.domain
        out = {}
        for m, c in terms.items():
            c = dom.convert(c)
            if c:
                out[tuple(m)] = c
        return Poly(self, out)

    def with_domain(self, domain: Domain) -> "PolyRing":
        return PolyRing(self.gens, domain)

    def with_gens(self, gens: Sequence[str]) -> "PolyRing":
        return PolyRing(gens, self.domain)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.gens == other.gens
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.gens, self.domain))

    def __repr__(self):
        return f"PolyRing({', '.join(self.gens)}; {self.domain})"


class Poly:
    """An immutable sparse polynomial."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Dict[Monomial, Number]):
        # terms must already be reduced and free of zeros
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------
    @property
    def domain(self):
        return self.ring.domain

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (
            len(self.terms) == 1 and not any(next(iter(self.terms)))
        )

    def constant_value(self):
        return self.terms.get((0,) * self.ring.ngens, 0)

    def total_degree(self, vars: Iterable[str] | None = None) -> int:
        """Total degree, optionally restricted to a subset of variables."""
        if not self.terms:
            return -1
        if vars is None:
            return max(sum(m) for m in self.terms)
        idx = [self.ring.index(v) for v in vars]
        return max(sum(m[i] for i in idx) for m in self.terms)

    def degree(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.index(var)
        return max(m[i] for m in self.terms)

    def min_degree(self, var: str) -> int:
        i = self.ring.index(var)
        return min(m[i] for m in self.terms) if self.terms else 0

    def used_vars(self) -> Tuple[str, ...]:
        seen = [False] * self.ring.ngens
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return tuple(g for g, s in zip(self.ring.gens, seen) if s)

    def coeff(self, mono: Monomial):
        return self.terms.get(tuple(mono), 0)

    def sorted_terms(self, key=grevlex_key):
        """Terms in decreasing order under ``key`` (grevlex by default)."""
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self, key=grevlex_key):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def leading_coeff(self, key=grevlex_key):
        return self.leading_term(key)[1]

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                if other.ring.gens == self.ring.gens and other.is_constant():
                    return self.ring.const(other.constant_value())
                raise ValueError(
                    f"ring mismatch: {self.ring!r} vs {other.ring!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        dom = self.ring.domain
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = dom.reduce(v + c)
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        dom = self.ring.domain
        return Poly(self.ring, {m: dom.reduce(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Poly":
        dom = self.ring.domain
        c = dom.convert(c)
        if c == 0:
            return self.ring.zero
        return Poly(self.ring, {m: dom.reduce(v * c) for m, v in self.terms.items()})

    def mul_monomial(self, mono: Monomial, c=1) -> "Poly":
        dom = self.ring.domain
        c = dom.convert(c)
        if c == 0:
            return self.ring.zero
        out = {}
        for m, v in self.terms.items():
            out[tuple(a + b for a, b in zip(m, mono))] = dom.reduce(v * c)
        return Poly(self.ring, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        acc: Dict[Monomial, Number] = {}
        get = acc.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                acc[m] = get(m, 0) + ca * cb
        dom = self.ring.domain
        out = {}
        for m, c in acc.items():
            c = dom.reduce(c)
            if c:
                out[m] = c
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.gens == other.ring.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.is_constant() and self.constant_value() == self.ring.domain.convert(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.gens, frozenset(self.terms.items())))
        return self._hash

    # -- calculus and substitution ------------------------------------
    def diff(self, var: str) -> "Poly":
        i = self.ring.index(var)
        dom = self.ring.domain
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                v = dom.reduce(c * e)
                if v:
                    nm = list(m)
                    nm[i] = e - 1
                    out[tuple(nm)] = v
        return Poly(self.ring, out)

    def evaluate(self, values: Mapping[str, object]) -> "Poly":
        """Substitute constants for some variables; the ring is unchanged."""
        dom = self.ring.domain
        idx = {self.ring.index(k): dom.convert(v) for k, v in values.items()}
        acc: Dict[Monomial, Number] = {}
        for m, c in self.terms.items():
            nm = list(m)
            for i, v in idx.items():
                e = nm[i]
                if e:
                    c = c * v**e
                    nm[i] = 0
            t = tuple(nm)
            acc[t] = acc.get(t, 0) + c
        out = {}
        for m, c in acc.items():
            c = dom.reduce(c)
            if c:
                out[m] = c
        return Poly(self.ring, out)

    def __call__(self, *point):
        """Evaluate at a full point, returning a domain element."""
        if len(point) != self.ring.ngens:
            raise ValueError("point dimension mismatch")
        dom = self.ring.domain
        pt = [dom.convert(v) for v in point]
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(pt, m):
                if e:
                    t = t * v**e
            total += t
        return dom.reduce(total)

    def eval_exact(self, point: Mapping[str, object]):
        """Evaluate at rationals (any ring domain treated as QQ)."""
        pt = [Fraction(point[g]) if g in point else None for g in self.ring.gens]
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for i, e in enumerate(m):
                if e:
                    if pt[i] is None:
                        raise KeyError(f"no value for {self.ring.gens[i]}")
                    t *= pt[i] ** e
            total += t
        return total

    def compose(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Substitute polynomials (in the same ring) for variables."""
        ring = self.ring
        sub = {ring.index(k): v for k, v in images.items()}
        power_cache: Dict[Tuple[int, int], Poly] = {}

        def power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = sub[i] ** e
            return power_cache[key]

        result: Dict[Monomial, Number] = {}
        dom = ring.domain
        for m, c in self.terms.items():
            rest = list(m)
            term = None
            for i in sub:
                e = m[i]
                rest[i] = 0
                if e:
                    pe = power(i, e)
                    term = pe if term is None else term * pe
            if term is None:
                t = tuple(rest)
                result[t] = result.get(t, 0) + c
                continue
            rest = tuple(rest)
            for tm, tc in term.terms.items():
                t = tuple(a + b for a, b in zip(tm, rest))
                result[t] = result.get(t, 0) + c * tc
        out = {}
        for m, c in result.items():
            c = dom.reduce(c)
            if c:
                out[m] = c
        return Poly(ring, out)

    # -- ring changes --------------------------------------------------
    def to_ring(self, ring: PolyRing) -> "Poly":
        """Re-express in ``ring``, matching variables by name."""
        if ring == self.ring:
            return self
        src = self.ring.gens
        pos = []
        for i, g in enumerate(src):
            if g in ring:
                pos.append(ring.index(g))
            else:
                pos.append(None)
        n = ring.ngens
        dom = ring.domain
        convert = ring.domain != self.ring.domain
        acc = {}
        for m, c in self.terms.items():
            if convert:
                c = dom.convert(c)
            nm = [0] * n
            for i, e in enumerate(m):
                if e:
                    j = pos[i]
                    if j is None:
                        raise ValueError(
                            f"variable {src[i]!r} not present in target ring"
                        )
                    nm[j] = e
            t = tuple(nm)
            acc[t] = acc.get(t, 0) + c
        out = {}
        for m, c in acc.items():
            c = dom.reduce(c)
            if c:
                out[m] = c
        return Poly(ring, out)

    def reduce_mod(self, p: int) -> "Poly":
        """Image in GF(p); raises ZeroDivisionError on a bad denominator."""
        return self.to_ring(self.ring.with_domain(PrimeField(p)))

    # -- normalisation -------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational content (QQ only)."""
        if not self.terms:
            return Fraction(0)
        nums = [Fraction(c).numerator for c in self.terms.values()]
        dens = [Fraction(c).denominator for c in self.terms.values()]
        g = reduce(gcd, nums)
        lcm = reduce(lambda a, b: a * b // gcd(a, b), dens)
        return Fraction(abs(g), lcm)

    def primitive(self, key=grevlex_key) -> "Poly":
        """Integer coefficients with unit content and positive leading coefficient."""
        if not self.terms:
            return self
        if isinstance(self.ring.domain, PrimeField):
            return self.monic(key)
        cont = self.content()
        lc = self.leading_coeff(key)
        if lc < 0:
            cont = -cont
        return Poly(
            self.ring,
            {m: QQ.reduce(Fraction(c) / cont) for m, c in self.terms.items()},
        )

    def monic(self, key=grevlex_key) -> "Poly":
        if not self.terms:
            return self
        dom = self.ring.domain
        inv = dom.inv(self.leading_coeff(key))
        return Poly(self.ring, {m: dom.reduce(c * inv) for m, c in self.terms.items()})

    # -- rendering -----------------------------------------------------
    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)!r})"


def render(f: Poly) -> str:
    """Render in the kernel expression grammar, grevlex-descending."""
    if not f.terms:
        return "0"
    gens = f.ring.gens
    parts = []
    for m, c in f.sorted_terms():
        if isinstance(f.ring.domain, PrimeField):
            c = f.ring.domain.symmetric(c)
        neg = c < 0
        a = -c if neg else c
        factors = []
        for g, e in zip(gens, m):
            if e == 1:
                factors.append(g)
            elif e > 1:
                factors.append(f"{g}^{e}")
        if a != 1 or not factors:
            factors.insert(0, str(a))
        body = "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Return ``f / g``; raise ValueError if ``g`` does not divide ``f``."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    q, r = divmod_poly(f, g)
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return q


def divmod_poly(f: Poly, g: Poly, key=grevlex_key):
    """Multivariate division of ``f`` by the single polynomial ``g``."""
    ring = f.ring
    dom = ring.domain
    lm, lc = g.leading_term(key)
    inv = dom.inv(lc)
    rem = dict(f.terms)
    quo: Dict[Monomial, Number] = {}
    out_rem: Dict[Monomial, Number] = {}
    gterms = list(g.terms.items())
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        if all(a >= b for a, b in zip(m, lm)):
            qm = tuple(a - b for a, b in zip(m, lm))
            qc = dom.reduce(c * inv)
            quo[qm] = qc
            for gm, gc in gterms:
                t = tuple(a + b for a, b in zip(gm, qm))
                v = dom.reduce(rem.get(t, 0) - qc * gc)
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        else:
            out_rem[m] = c
            del rem[m]
    return Poly(ring, quo), Poly(ring, out_rem)


def strip_factor(f: Poly, g: Poly) -> Poly:
    """Divide ``f`` by ``g`` as many times as the division stays exact."""
    if g.is_constant():
        return f
    while not f.is_zero():
        q, r = divmod_poly(f, g)
        if not r.is_zero():
            break
        f = q
    return f


def strip_variable_content(f: Poly, var: str) -> Poly:
    """Remove the largest power of ``var`` dividing ``f``."""
    k = f.min_degree(var)
    if k == 0 or f.is_zero():
        return f
    i = f.ring.index(var)
    out = {}
    for m, c in f.terms.items():
        nm = list(m)
        nm[i] -= k
        out[tuple(nm)] = c
    return Poly(f.ring, out)
