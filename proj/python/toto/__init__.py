"""First-order limiting probabilities on uniform 231-avoiding permutations."""

from ._toto import (
    ParseError,
    Permutation,
    TotoError,
    TypeSystem,
    avoids_231,
    build_type_system,
    catalan,
    coefficients,
    compose_at_max,
    contains_pattern,
    decompose,
    enumerate_av231,
    kakeya,
    limiting_probability,
    models,
    monte_carlo,
    normalize_sentence,
    quantifier_depth,
    sample,
)

__all__ = [
    "ParseError",
    "Permutation",
    "TotoError",
    "TypeSystem",
    "avoids_231",
    "build_type_system",
    "catalan",
    "coefficients",
    "compose_at_max",
    "contains_pattern",
    "decompose",
    "enumerate_av231",
    "kakeya",
    "limiting_probability",
    "models",
    "monte_carlo",
    "normalize_sentence",
    "quantifier_depth",
    "sample",
]
