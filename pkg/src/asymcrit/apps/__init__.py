"""Applications: global infimum and sample points of {f > 0}."""

from .optimize import (
    ASYMPTOTIC,
    AT_INFINITY,
    BOTH,
    CRITICAL,
    MINIMUM,
    UNBOUNDED,
    DegenerateEliminationError,
    GcvReport,
    InconclusiveError,
    InfimumVerdict,
    SampleReport,
    certify_level,
    choose_test_points,
    critical_values_poly,
    distance_critical_system,
    fiber_sample,
    gcv,
    infimum,
    sample_positive,
)

__all__ = [
    "ASYMPTOTIC",
    "AT_INFINITY",
    "BOTH",
    "CRITICAL",
    "MINIMUM",
    "UNBOUNDED",
    "DegenerateEliminationError",
    "GcvReport",
    "InconclusiveError",
    "InfimumVerdict",
    "SampleReport",
    "certify_level",
    "choose_test_points",
    "critical_values_poly",
    "distance_critical_system",
    "fiber_sample",
    "gcv",
    "infimum",
    "sample_positive",
]
