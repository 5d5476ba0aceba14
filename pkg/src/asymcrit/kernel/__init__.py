"""Exact arithmetic kernel: domains, sparse polynomials, matrices, parsing."""

from .domains import GF, QQ, PrimeField, RationalField, is_probable_prime, primes_descending
from .linalg import (
    DegenerateBlockError,
    PolyMatrix,
    RationalFunction,
    det_fraction_free,
    jacobian,
    kernel_basis_cramer,
    kernel_numerators,
    remove_row,
)
from .modular import (
    ReconstructionError,
    combine_images,
    crt_combine,
    crt_pair,
    crt_poly,
    rational_reconstruct,
)
from .parse import ParseError, UnknownVariableError, parse_polynomial
from .poly import (
    Poly,
    PolyRing,
    divmod_poly,
    exact_divide,
    grevlex_key,
    render,
    strip_factor,
    strip_variable_content,
)
from .transforms import substitute_linear, tau1_clear, tau1_numerator

__all__ = [
    "GF", "QQ", "PrimeField", "RationalField", "is_probable_prime", "primes_descending",
    "DegenerateBlockError", "PolyMatrix", "RationalFunction", "det_fraction_free",
    "jacobian", "kernel_basis_cramer", "kernel_numerators", "remove_row",
    "ReconstructionError", "combine_images", "crt_combine", "crt_pair", "crt_poly",
    "rational_reconstruct", "ParseError", "UnknownVariableError", "parse_polynomial",
    "Poly", "PolyRing", "divmod_poly", "exact_divide", "grevlex_key", "render",
    "strip_factor", "strip_variable_content", "substitute_linear", "tau1_clear",
    "tau1_numerator",
]
