"""Exact arithmetic kernel: polynomials, quotient rings, linear algebra."""

from .linalg import (
    AffineSolutionSpace,
    ExactMatrix,
    as_vector,
    invert,
    solve_affine,
    solve_affine_rows,
)
from .poly import (
    Monomial,
    Polynomial,
    QuotientRing,
    add,
    cohomological_degree,
    const,
    graded_basis,
    homogeneous_exponent_sum,
    monomial,
    mul_raw,
    normal_form,
    product_of_linear_factors,
    ring_product,
    scale,
    sorted_terms,
    sub,
    term_sort_key,
    variable,
    zero,
)

__all__ = [
    "AffineSolutionSpace",
    "ExactMatrix",
    "Monomial",
    "Polynomial",
    "QuotientRing",
    "add",
    "as_vector",
    "cohomological_degree",
    "const",
    "graded_basis",
    "homogeneous_exponent_sum",
    "invert",
    "monomial",
    "mul_raw",
    "normal_form",
    "product_of_linear_factors",
    "ring_product",
    "scale",
    "solve_affine",
    "solve_affine_rows",
    "sorted_terms",
    "sub",
    "term_sort_key",
    "variable",
    "zero",
]
