"""Univariate real algebraic numbers and a shape-position real solver."""

from .algebraic import (
    AlgebraicNumber,
    IsolatingInterval,
    compare,
    isolate_real_roots,
    rational_between,
    rational_number,
    real_roots,
    refine,
    sign_at,
    squarefree_part,
)
from .solve import (
    NotZeroDimensionalError,
    RealPoint,
    RealSolutionSet,
    ShapeError,
    interval_eval,
    zero_dim_real_solve,
)

__all__ = [
    "AlgebraicNumber",
    "IsolatingInterval",
    "NotZeroDimensionalError",
    "RealPoint",
    "RealSolutionSet",
    "ShapeError",
    "compare",
    "interval_eval",
    "isolate_real_roots",
    "rational_between",
    "rational_number",
    "real_roots",
    "refine",
    "sign_at",
    "squarefree_part",
    "zero_dim_real_solve",
]
