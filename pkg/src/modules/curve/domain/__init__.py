"""Módulo de dominio de curvas elípticas con 2-torsión racional."""
from src.modules.curve.domain.arithmetic import (
    add,
    descent_image,
    negate,
    torsion_point,
    translate_by_torsion,
)
from src.modules.curve.domain.entities import CYCLIC, SplitCurve
from src.modules.curve.domain.factories import (
    SplitCurveFactory,
    from_ainvs,
    from_coefficients,
    from_roots,
    minimal_short_model,
)
from src.modules.curve.domain.point_search import point_search
from src.modules.curve.domain.value_objects import CurvePoint, SquareClassTriple

__all__ = [
    "add",
    "descent_image",
    "negate",
    "torsion_point",
    "translate_by_torsion",
    "CYCLIC",
    "SplitCurve",
    "SplitCurveFactory",
    "from_ainvs",
    "from_coefficients",
    "from_roots",
    "minimal_short_model",
    "point_search",
    "CurvePoint",
    "SquareClassTriple",
]
