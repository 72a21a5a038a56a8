"""Exponent complexes, Cohen-Macaulay tests and Euler-operator ranks for monomial ideals."""

from ._expc import (
    DomainError,
    Ideal,
    ValidationError,
    __version__,
    components,
    degree,
    exponent_catalog,
    exponent_complex,
    exponents,
    generate_generic,
    is_cohen_macaulay,
    is_cohen_macaulay_complex,
    is_unmixed,
    krull_dimension,
    polarize,
    radical,
    rank,
    rank_oracle,
    rank_squarefree,
    reduced_homology,
    validate,
    verify,
)

__all__ = [
    "DomainError",
    "Ideal",
    "ValidationError",
    "__version__",
    "components",
    "degree",
    "exponent_catalog",
    "exponent_complex",
    "exponents",
    "generate_generic",
    "is_cohen_macaulay",
    "is_cohen_macaulay_complex",
    "is_unmixed",
    "krull_dimension",
    "polarize",
    "radical",
    "rank",
    "rank_oracle",
    "rank_squarefree",
    "reduced_homology",
    "validate",
    "verify",
]
