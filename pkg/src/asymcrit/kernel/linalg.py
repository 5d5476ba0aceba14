"""Polynomial matrices: Jacobians, fraction-free determinants, Cramer kernels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .poly import Poly, PolyRing, exact_divide


class DegenerateBlockError(ArithmeticError):
    """The leading square block of a Jacobian is singular; redraw the randomness."""


@dataclass(frozen=True)
class RationalFunction:
    numer: Poly
    denom: Poly

    def __post_init__(self):
        if self.denom.is_zero():
            raise ZeroDivisionError("zero denominator")

    def eval_exact(self, point):
        d = self.denom.eval_exact(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.numer.eval_exact(point) / d

    def reduced(self) -> "RationalFunction":
        """Cancel the denominator when it divides the numerator exactly."""
        if self.denom.is_constant():
            c = self.denom.constant_value()
            return RationalFunction(self.numer.scale(self.numer.domain.inv(c)), self.denom.ring.one)
        try:
            q = exact_divide(self.numer, self.denom)
        except ValueError:
            return self
        return RationalFunction(q, self.denom.ring.one)

    def __str__(self):
        if self.denom == 1:
            return str(self.numer)
        return f"({self.numer}) / ({self.denom})"


class PolyMatrix:
    """Row-major matrix of polynomials over a common ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, rows: int, cols: int, entries: Sequence[Poly]):
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows*cols")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, ring: PolyRing, rows: Sequence[Sequence[Poly]], cols: int | None = None):
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return cls(ring, len(rows), ncols, [e for r in rows for e in r])

    def __getitem__(self, ij: Tuple[int, int]) -> Poly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[Poly]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> List[Poly]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self) -> List[List[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(
            self.ring, len(rows), len(cols), [self[i, j] for i in rows for j in cols]
        )

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.entries == other.entries
        )

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.tolist())
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


def jacobian(fs: Sequence[Poly], zvars: Sequence[str]) -> PolyMatrix:
    if not fs:
        raise ValueError("need at least one polynomial")
    ring = fs[0].ring
    return PolyMatrix(ring, len(fs), len(zvars), [f.diff(z) for f in fs for z in zvars])


def remove_row(J: PolyMatrix, j: int) -> PolyMatrix:
    """Drop row ``j`` (1-based)."""
    if not 1 <= j <= J.rows:
        raise IndexError(f"row index {j} out of range 1..{J.rows}")
    keep = [i for i in range(J.rows) if i != j - 1]
    return J.submatrix(keep, range(J.cols))


def det_fraction_free(M: PolyMatrix) -> Poly:
    """Determinant by Bareiss elimination with exact polynomial division."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    ring = M.ring
    if n == 0:
        return ring.one
    a = [list(r) for r in M.tolist()]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ring.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num if prev == 1 else exact_divide(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def kernel_basis_cramer(J: PolyMatrix):
    """Kernel basis of a generic-rank (m x n) matrix, m < n, via Cramer's rule.

    Returns ``(basis, delta)`` where ``delta`` is the determinant of the leading
    m x m block and ``basis[k]`` is a list of n rational functions with
    denominator ``delta``.  Numerators are signed maximal minors.
    """
    basis_numers, delta = kernel_numerators(J)
    basis = [[RationalFunction(num, delta) for num in vec] for vec in basis_numers]
    return basis, delta


def kernel_numerators(J: PolyMatrix):
    """Numerator vectors of the Cramer kernel basis together with ``delta``."""
    ring = J.ring
    m, n = J.rows, J.cols
    if m == 0:
        vecs = []
        for k in range(n):
            vecs.append([ring.one if i == k else ring.zero for i in range(n)])
        return vecs, ring.one
    if m >= n:
        raise ValueError("kernel basis needs fewer rows than columns")
    lead = list(range(m))
    D = J.submatrix(range(m), lead)
    delta = det_fraction_free(D)
    if delta.is_zero():
        raise DegenerateBlockError(
            "leading block of the Jacobian is singular; redraw the change of variables"
        )
    vecs = []
    for k in range(m, n):
        rhs = [-J[i, k] for i in range(m)]
        vec = []
        for col in range(m):
            rows = []
            for i in range(m):
                row = [rhs[i] if c == col else J[i, c] for c in range(m)]
                rows.append(row)
            vec.append(det_fraction_free(PolyMatrix.from_rows(ring, rows)))
        for c in range(m, n):
            vec.append(delta if c == k else ring.zero)
        vecs.append(vec)
    return vecs, delta


def matvec(J: PolyMatrix, v: Sequence[Poly]) -> List[Poly]:
    out = []
    for i in range(J.rows):
        acc = J.ring.zero
        for j in range(J.cols):
            if not J[i, j].is_zero() and not v[j].is_zero():
                acc = acc + J[i, j] * v[j]
        out.append(acc)
    return out
