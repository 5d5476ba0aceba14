"""Gröbner bases, elimination, saturation, intersection and ideal degree."""

from .engine import Budget, ResourceLimitError
from .ideals import (
    IdealBasis,
    contains,
    eliminate,
    groebner_basis,
    ideal_degree,
    intersect,
    is_subideal,
    krull_dimension,
    normal_form,
    same_ideal,
    saturate,
    saturate_bayer,
    saturate_rabinowitsch,
)
from .orders import MonomialOrder

__all__ = [
    "Budget",
    "IdealBasis",
    "MonomialOrder",
    "ResourceLimitError",
    "contains",
    "eliminate",
    "groebner_basis",
    "ideal_degree",
    "intersect",
    "is_subideal",
    "krull_dimension",
    "normal_form",
    "same_ideal",
    "saturate",
    "saturate_bayer",
    "saturate_rabinowitsch",
]
