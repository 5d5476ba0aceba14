"""Chinese remaindering and rational reconstruction of polynomial images."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Sequence, Tuple

from .domains import QQ
from .poly import Poly, PolyRing


class ReconstructionError(ArithmeticError):
    """No rational within the Wang bound; more primes are needed."""


def crt_pair(a1: int, m1: int, a2: int, m2: int) -> Tuple[int, int]:
    if gcd(m1, m2) != 1:
        raise ValueError(f"moduli {m1} and {m2} are not coprime")
    t = (a2 - a1) * pow(m1, -1, m2) % m2
    return a1 + m1 * t, m1 * m2


def crt_combine(residues: Sequence[Tuple[Poly, int]]) -> Tuple[Dict, int]:
    """Coefficientwise CRT of polynomial images.

    ``residues`` holds ``(image, modulus)`` pairs.  Returns the combined
    coefficient map (values in ``[0, M)``) and ``M``, the product of moduli.
    Missing monomials read as zero.
    """
    if not residues:
        raise ValueError("nothing to combine")
    monos = set()
    for f, _ in residues:
        monos.update(f.terms)
    combined: Dict = {m: 0 for m in monos}
    M = 1
    for f, p in residues:
        new = {}
        for m in monos:
            v, _ = crt_pair(combined[m], M, f.terms.get(m, 0) % p, p)
            new[m] = v
        M *= p
        combined = new
    return {m: c for m, c in combined.items() if c % M}, M


def crt_poly(residues: Sequence[Tuple[Poly, int]], ring: PolyRing) -> Tuple[Poly, int]:
    """CRT of images as an integer polynomial over ``ring`` (domain QQ)."""
    coeffs, M = crt_combine(residues)
    return ring.with_domain(QQ).from_dict(coeffs), M


def rational_reconstruct(a: int, m: int) -> Fraction:
    """Return n/d with |n|, d <= sqrt(m/2) and n = a*d (mod m).

    Raises :class:`ReconstructionError` when no such fraction exists.
    """
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1 or gcd(abs(s1), m) != 1:
        raise ReconstructionError(f"no rational reconstruction of {a} mod {m}")
    if s1 < 0:
        r1, s1 = -r1, -s1
    return Fraction(r1, s1)


def reconstruct_poly(coeffs: Dict, M: int, ring: PolyRing) -> Poly:
    """Rationally reconstruct every coefficient of a CRT image."""
    out = {}
    for mono, c in coeffs.items():
        out[mono] = rational_reconstruct(c, M)
    return ring.with_domain(QQ).from_dict(out)


def symmetric_lift(coeffs: Dict, M: int) -> Dict:
    half = M // 2
    return {m: (c - M if c > half else c) for m, c in coeffs.items()}


def combine_images(images: List[Tuple[Poly, int]], ring: PolyRing) -> Poly:
    """CRT followed by rational reconstruction; the usual modular pipeline."""
    coeffs, M = crt_combine(images)
    return reconstruct_poly(coeffs, M, ring)
