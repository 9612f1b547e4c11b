"""Módulo de dominio de aritmética: factorización, lugares y símbolos locales."""
from src.modules.numth.domain.factorization import (
    Factorization,
    factorize,
    prime_support,
    squarefree_kernel,
    valuation,
)
from src.modules.numth.domain.hilbert import hilbert_symbol
from src.modules.numth.domain.precision import PrecisionPolicy
from src.modules.numth.domain.squares import (
    class_dimension,
    is_square_local,
    local_class_vector,
    padic_sqrt,
    squarefree_part,
)
from src.modules.numth.domain.value_objects import (
    PAdicNumber,
    Place,
    PlaceKind,
    RealInterval,
    SquareClass,
)

__all__ = [
    "Factorization",
    "factorize",
    "prime_support",
    "squarefree_kernel",
    "valuation",
    "hilbert_symbol",
    "PrecisionPolicy",
    "class_dimension",
    "is_square_local",
    "local_class_vector",
    "padic_sqrt",
    "squarefree_part",
    "PAdicNumber",
    "Place",
    "PlaceKind",
    "RealInterval",
    "SquareClass",
]
