"""Asymptotic critical values: systems, algorithms acv1/acv2/kos, degree bound."""

from .maps import (
    DominantMap,
    check_dominant,
    degree_bound,
    dense_polynomial,
    kuo_distance_sq,
    make_family,
)
from .randomness import Randomness, draw_randomness, identity_randomness
from .run import AcvResult, EmptyOutputError, NotDominantError, acv_run, solve_index
from .system import VARIANTS, AcvSystem, build_system

__all__ = [
    "AcvResult",
    "AcvSystem",
    "DominantMap",
    "EmptyOutputError",
    "NotDominantError",
    "Randomness",
    "VARIANTS",
    "acv_run",
    "build_system",
    "check_dominant",
    "degree_bound",
    "dense_polynomial",
    "draw_randomness",
    "identity_randomness",
    "kuo_distance_sq",
    "make_family",
    "solve_index",
]
