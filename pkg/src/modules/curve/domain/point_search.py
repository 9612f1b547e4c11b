"""
Búsqueda ingenua de puntos racionales con x = m/d².
"""
import logging
from fractions import Fraction
from math import gcd, isqrt
from typing import List

from sympy.ntheory.primetest import is_square

from src.core.exceptions import ValidationError
from src.modules.curve.domain.arithmetic import torsion_point
from src.modules.curve.domain.entities import SplitCurve
from src.modules.curve.domain.value_objects import CurvePoint

logger = logging.getLogger(__name__)


def point_search(curve: SplitCurve, height_bound: int) -> List[CurvePoint]:
    """
    Todos los puntos con x = m/d², |m| ≤ H, d² ≤ H, más la 2-torsión.

    Con y = n/d³ la ecuación queda n² = m³ + A·m·d⁴ + B·d⁶ en enteros.

    Args:
        curve: Curva escindida
        height_bound: Cota H ≥ 1

    Returns:
        Lista ordenada (T₀ primero, luego por (x, y))
    """
    if height_bound < 1:
        raise ValidationError("La cota de altura debe ser positiva", field="height_bound", value=height_bound)
    found = {torsion_point(curve, i) for i in range(4)}
    A, B = curve.A, curve.B
    for d in range(1, isqrt(height_bound) + 1):
        d2, d4, d6 = d * d, d ** 4, d ** 6
        for m in range(-height_bound, height_bound + 1):
            if d > 1 and gcd(m, d) != 1:
                continue
            rhs = m ** 3 + A * m * d4 + B * d6
            if rhs < 0 or not is_square(rhs):
                continue
            n = isqrt(rhs)
            x = Fraction(m, d2)
            y = Fraction(n, d ** 3)
            found.add(CurvePoint(x, y))
            found.add(CurvePoint(x, -y))
    points = sorted(found, key=lambda P: (not P.is_infinity, P.x or 0, P.y or 0))
    logger.debug(
        "Búsqueda de puntos completada",
        extra={"curve": str(curve), "height_bound": height_bound, "points": len(points)}
    )
    return points
