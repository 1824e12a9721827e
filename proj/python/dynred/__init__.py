"""Exact reduction theory of endomorphisms of projective space over Q."""

from ._dynred import (
    BudgetError,
    DomainError,
    Presentation,
    UsageError,
    conjugate,
    divisor,
    globalize,
    is_morphism,
    minimize,
    potential_good_reduction,
    primitive_integral,
    projectively_equal,
    random_corpus,
    resultant,
    semistable,
    valuation,
    verify,
)

__all__ = [
    "BudgetError",
    "DomainError",
    "Presentation",
    "UsageError",
    "conjugate",
    "divisor",
    "globalize",
    "is_morphism",
    "minimize",
    "potential_good_reduction",
    "primitive_integral",
    "projectively_equal",
    "random_corpus",
    "resultant",
    "semistable",
    "valuation",
    "verify",
]
