"""
Ley de grupo, traslación por 2-torsión y aplicación de descenso.
"""
from fractions import Fraction
from typing import Any, Callable, Optional

from src.core.exceptions import ValidationError
from src.modules.curve.domain.entities import CYCLIC, SplitCurve
from src.modules.curve.domain.value_objects import CurvePoint, SquareClassTriple

_GROUP_CONTEXTS = ("rational", "finite_field")


def torsion_point(curve: SplitCurve, i: int, field: Optional[Callable[[int], Any]] = None) -> CurvePoint:
    """
    T_i = (e_i, 0); T₀ es el punto del infinito.

    Args:
        field: Constructor de elementos del cuerpo (p. ej. GF(p)); racional si es None
    """
    if i == 0:
        return CurvePoint.infinity()
    make = field or Fraction
    return CurvePoint(make(curve.e(i)), make(0))


def negate(point: CurvePoint) -> CurvePoint:
    if point.is_infinity:
        return point
    return CurvePoint(point.x, -point.y)


def _check_on_curve(point: CurvePoint, curve: SplitCurve) -> None:
    if not point.context.startswith(_GROUP_CONTEXTS):
        raise ValidationError(
            f"Ley de grupo no disponible en el contexto {point.context}",
            field="point",
            value=point
        )
    if not curve.contains(point):
        raise ValidationError("El punto no está en la curva", field="point", value=point)


def add(P: CurvePoint, Q: CurvePoint, curve: SplitCurve) -> CurvePoint:
    """
    Suma por cuerda y tangente.

    Raises:
        ValidationError: Contextos de coordenadas distintos o punto fuera de la curva
    """
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.context != Q.context:
        raise ValidationError(
            f"No se suman puntos de contextos {P.context} y {Q.context}",
            field="Q",
            value=Q
        )
    _check_on_curve(P, curve)
    _check_on_curve(Q, curve)

    if P.x == Q.x:
        if P.y + Q.y == 0:
            return CurvePoint.infinity()
        slope = (3 * P.x * P.x + curve.A) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x = slope * slope - P.x - Q.x
    y = slope * (P.x - x) - P.y
    return CurvePoint(x, y)


def translate_by_torsion(P: CurvePoint, i: int, curve: SplitCurve) -> CurvePoint:
    """
    P + T_i por la fórmula cerrada:

        x' = (e_i·x + e_j·e_k − e_i(e_j + e_k)) / (x − e_i)
        y' = −(e_j − e_i)(e_k − e_i)·y / (x − e_i)²

    Si x(P) = e_i la fórmula es singular y se usa la ley de grupo.
    """
    if P.is_infinity:
        return torsion_point(curve, i)
    j, k = CYCLIC[i]
    ei, ej, ek = curve.e(i), curve.e(j), curve.e(k)
    if P.x == ei:
        field = None if P.context == "rational" else type(P.x)
        return add(P, torsion_point(curve, i, field), curve)
    d = P.x - ei
    x = (ei * P.x + ej * ek - ei * (ej + ek)) / d
    y = -(ej - ei) * (ek - ei) * P.y / (d * d)
    return CurvePoint(x, y)


def descent_image(P: CurvePoint, curve: SplitCurve) -> SquareClassTriple:
    """
    Imagen de P por E(Q) → (Q*/Q*²)³, P ↦ (x − e₁, x − e₂, x − e₃).

    En T_i la coordenada i-ésima es (e_i − e_j)(e_i − e_k); en T₀ la terna trivial.
    """
    if P.is_infinity:
        return SquareClassTriple.trivial()
    if P.context != "rational":
        raise ValidationError("La aplicación de descenso requiere un punto racional", field="P", value=P)
    values = []
    for m in (1, 2, 3):
        if P.x == curve.e(m):
            j, k = CYCLIC[m]
            values.append((curve.e(m) - curve.e(j)) * (curve.e(m) - curve.e(k)))
        else:
            values.append(P.x - curve.e(m))
    return SquareClassTriple.from_values(values)
