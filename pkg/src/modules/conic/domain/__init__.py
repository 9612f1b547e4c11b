"""Módulo de dominio de Cónicas: ecuaciones de Legendre y formas tangentes."""
from src.modules.conic.domain.solver import (
    conic_for,
    legendre_criterion,
    legendre_solvable,
    legendre_solve,
    reparametrize,
    tangent_form,
)
from src.modules.conic.domain.value_objects import (
    ConicProvenance,
    DiagonalConic,
    NormalForm,
    ProjPoint,
    TangentForm,
)

__all__ = [
    "conic_for",
    "legendre_criterion",
    "legendre_solvable",
    "legendre_solve",
    "reparametrize",
    "tangent_form",
    "ConicProvenance",
    "DiagonalConic",
    "NormalForm",
    "ProjPoint",
    "TangentForm",
]
