"""Coordinate changes: linear substitution and the chart at infinity along z1."""

from __future__ import annotations

from typing import Sequence, Tuple

from .linalg import RationalFunction
from .poly import Poly, strip_variable_content


def substitute_linear(f: Poly, A: Sequence[Sequence], zvars: Sequence[str]) -> Poly:
    """Return ``f(A z)``: each ``z_i`` becomes ``sum_j A[i][j] * z_j``.

    Variables outside ``zvars`` are left untouched.
    """
    n = len(zvars)
    if len(A) != n or any(len(row) != n for row in A):
        raise ValueError(f"expected a {n}x{n} matrix for {n} variables")
    ring = f.ring
    images = {}
    for i, z in enumerate(zvars):
        lin = ring.zero
        for j, zj in enumerate(zvars):
            if A[i][j]:
                lin = lin + ring.gen(zj).scale(A[i][j])
        images[z] = lin
    return f.compose(images)


def tau1_numerator(f: Poly, zvars: Sequence[str]) -> Tuple[Poly, int]:
    """Numerator of ``f(tau_1(z))`` and the z1 exponent of its denominator.

    ``f(tau_1 z) = N / z1^k`` with ``N`` free of z1 content; returns ``(N, k)``.
    """
    if f.is_zero():
        return f, 0
    zidx = [f.ring.index(z) for z in zvars]
    i1 = zidx[0]
    # z^e -> z1^(-|e|_z) * prod_{i>=2} z_i^e_i, then multiply by z1^k
    k = f.total_degree(zvars)
    out = {}
    for m, c in f.terms.items():
        nm = list(m)
        nm[i1] = k - sum(m[i] for i in zidx)
        out[tuple(nm)] = c
    N = Poly(f.ring, out)
    stripped = strip_variable_content(N, zvars[0])
    k -= N.min_degree(zvars[0])
    return stripped, k


def tau1_clear(h, zvars: Sequence[str]) -> Poly:
    """Polynomial part of ``h(tau_1 z)`` after clearing the z1 denominator.

    ``h`` is a polynomial or a :class:`RationalFunction` whose image under
    tau_1 has a power of z1 as denominator.  The result has no z1 content.
    """
    if isinstance(h, RationalFunction):
        num, _ = tau1_numerator(h.numer, zvars)
        den, _ = tau1_numerator(h.denom, zvars)
        if not den.is_constant():
            raise ValueError("denominator is not a power of z1 after tau_1")
        return num.scale(h.denom.domain.inv(den.constant_value()))
    num, _ = tau1_numerator(h, zvars)
    return num
