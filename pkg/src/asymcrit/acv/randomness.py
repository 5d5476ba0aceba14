"""Seeded random choices: the change of variables A, the vectors r, the point a."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

DEFAULT_BOUND = 99


@dataclass(frozen=True)
class Randomness:
    seed: int
    A: Tuple[Tuple[int, ...], ...]
    r: Tuple[Tuple[int, ...], ...]
    a: Tuple[int, ...]
    bound: int = DEFAULT_BOUND

    @property
    def Ainv_exists(self) -> bool:
        return int_det(self.A) != 0

    @property
    def n(self) -> int:
        return len(self.A)

    @property
    def p(self) -> int:
        return len(self.r)

    def as_dict(self) -> dict:
        return {
            "seed": str(self.seed),
            "bound": str(self.bound),
            "A": [[str(x) for x in row] for row in self.A],
            "r": [[str(x) for x in row] for row in self.r],
            "a": [str(x) for x in self.a],
        }


def int_det(M) -> int:
    """Exact determinant of an integer matrix (Bareiss)."""
    M = [list(row) for row in M]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if sw is None:
                return 0
            M[k], M[sw] = M[sw], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def inverse(M) -> List[List[Fraction]]:
    """Exact rational inverse by Gauss-Jordan."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                t = aug[i][col]
                aug[i] = [x - t * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _nonzero(rng: random.Random, bound: int) -> int:
    while True:
        x = rng.randint(-bound, bound)
        if x:
            return x


def draw_randomness(n: int, p: int, seed: int, bound: int = DEFAULT_BOUND) -> Randomness:
    """Reproducible random data for one run; ``A`` is redrawn until invertible."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    while True:
        A = tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(n))
        if int_det(A) != 0:
            break
    r = tuple(tuple(_nonzero(rng, bound) for _ in range(n - p + 1)) for _ in range(p))
    a = tuple(_nonzero(rng, bound) for _ in range(n))
    return Randomness(seed, A, r, a, bound)


def identity_randomness(n: int, p: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> Randomness:
    """Randomness with ``A`` the identity; used to reproduce worked examples."""
    base = draw_randomness(n, p, seed, bound)
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return Randomness(seed, eye, base.r, base.a, bound)
