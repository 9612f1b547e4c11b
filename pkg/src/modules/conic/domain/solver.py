"""
Resolución de ecuaciones de Legendre y formas tangentes.

Flujo de legendre_solve:
1. Criterio de resolubilidad (signo en ∞ y símbolos de Hilbert en p | 2abc)
2. Atajo de eje cuando dos coeficientes normalizados se cancelan
3. Descenso ternario de sympy, verificado por sustitución
4. Búsqueda acotada por la cota clásica |X| ≤ √|bc| como respaldo
"""
import logging
import random
from math import isqrt
from typing import Optional, Tuple

from sympy import symbols
from sympy.ntheory import is_quad_residue
from sympy.ntheory.primetest import is_square
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic_normal

from src.core.config import settings
from src.core.exceptions import ConsistencyError, SearchExhaustedError, ValidationError
from src.modules.conic.domain.value_objects import ConicProvenance, DiagonalConic, ProjPoint, TangentForm
from src.modules.curve.domain import CYCLIC, SplitCurve, SquareClassTriple
from src.modules.numth.domain import Place, hilbert_symbol, prime_support

logger = logging.getLogger(__name__)

_X, _Y, _Z = symbols("X Y Z", integer=True)


def conic_for(curve: SplitCurve, beta: SquareClassTriple, i: int) -> DiagonalConic:
    """
    Cónica β_j·Γ_j² − β_k·Γ_k² + (e_j − e_k)·T² = 0 en coordenadas (Γ_j, Γ_k, T).

    Es H_i multiplicada por e_j − e_k, con (j, k) el complemento cíclico de i.
    """
    if i not in CYCLIC:
        raise ValidationError("El índice debe ser 1, 2 o 3", field="i", value=i)
    j, k = CYCLIC[i]
    return DiagonalConic(
        a=beta.component(j),
        b=-beta.component(k),
        c=curve.e(j) - curve.e(k),
        provenance=ConicProvenance(curve=curve, beta=beta, index=i)
    )


def legendre_solvable(conic: DiagonalConic) -> bool:
    """
    Principio local-global: resoluble sobre Q si y solo si lo es en ∞ y en
    cada primo p | 2abc, es decir (−ac, −bc)_v = 1.
    """
    a, b, c = conic.normal_form.coefficients
    if (a > 0) == (b > 0) == (c > 0):
        return False
    for p in prime_support(2 * a * b * c):
        if hilbert_symbol(-a * c, -b * c, Place.finite(p)) != 1:
            return False
    return True


def legendre_criterion(conic: DiagonalConic) -> bool:
    """
    Teorema de Legendre sobre la forma normalizada: signos mixtos y
    −bc, −ac, −ab restos cuadráticos módulo |a|, |b|, |c|.
    """
    a, b, c = conic.normal_form.coefficients
    if (a > 0) == (b > 0) == (c > 0):
        return False
    for value, modulus in ((-b * c, abs(a)), (-a * c, abs(b)), (-a * b, abs(c))):
        if modulus > 1 and not is_quad_residue(value % modulus, modulus):
            return False
    return True


def _axis_point(a: int, b: int, c: int) -> Optional[Tuple[int, int, int]]:
    if b == -c:
        return (0, 1, 1)
    if a == -c:
        return (1, 0, 1)
    if a == -b:
        return (1, 1, 0)
    return None


def _descent_point(a: int, b: int, c: int) -> Optional[Tuple[int, int, int]]:
    try:
        solution = diop_ternary_quadratic_normal(a * _X ** 2 + b * _Y ** 2 + c * _Z ** 2)
    except (ValueError, TypeError, ZeroDivisionError, NotImplementedError) as exc:
        logger.warning(
            "Descenso ternario fallido, se usa la búsqueda acotada",
            extra={"conic": (a, b, c), "error": str(exc)}
        )
        return None
    if not solution or None in solution:
        return None
    point = tuple(int(value) for value in solution)
    if not any(point) or a * point[0] ** 2 + b * point[1] ** 2 + c * point[2] ** 2 != 0:
        logger.warning("Solución de sympy rechazada en la verificación", extra={"conic": (a, b, c)})
        return None
    return point


def _bounded_search(a: int, b: int, c: int, limit: int) -> Tuple[int, int, int]:
    """Busca con |X| ≤ √|bc|, |Y| ≤ √|ac| (existe solución en esa caja)."""
    bound_x = isqrt(abs(b * c)) + 1
    bound_y = isqrt(abs(a * c)) + 1
    visited = 0
    for x in range(bound_x + 1):
        for y in range(-bound_y, bound_y + 1):
            visited += 1
            if visited > limit:
                raise SearchExhaustedError(
                    "Búsqueda acotada agotada sin punto",
                    context={"conic": [a, b, c], "limit": limit}
                )
            if x == 0 and y == 0:
                continue
            numerator = -(a * x * x + b * y * y)
            if numerator % c:
                continue
            z2 = numerator // c
            if z2 >= 0 and is_square(z2):
                return (x, y, isqrt(z2))
    raise SearchExhaustedError(
        "La caja de Legendre no contiene puntos",
        context={"conic": [a, b, c]}
    )


def legendre_solve(conic: DiagonalConic, rng: Optional[random.Random] = None) -> Optional[ProjPoint]:
    """
    Punto racional primitivo de la cónica.

    Args:
        conic: Cónica diagonal (se normaliza internamente)
        rng: Si se da, el punto se reparametriza con una recta aleatoria

    Returns:
        ProjPoint verificado por sustitución exacta, o None si no hay puntos

    Raises:
        SearchExhaustedError: La búsqueda de respaldo supera el límite configurado
    """
    if not legendre_solvable(conic):
        return None
    normal = conic.normal_form
    a, b, c = normal.coefficients
    point = (
        _axis_point(a, b, c)
        or _descent_point(a, b, c)
        or _bounded_search(a, b, c, settings.conic_search_limit)
    )
    result = ProjPoint.primitive([s * t for s, t in zip(normal.scales, point)])
    if not conic.contains(result):
        raise ConsistencyError(
            "El punto de la cónica no verifica la ecuación",
            context={"conic": str(conic), "point": str(result)}
        )
    if rng is not None:
        result = reparametrize(conic, result, rng)
    return result


def reparametrize(conic: DiagonalConic, q: ProjPoint, rng: random.Random, *, attempts: int = 50) -> ProjPoint:
    """
    Segundo corte de la cónica con la recta por q en una dirección aleatoria d:
    q' = Q(d)·q − 2·B(q, d)·d.
    """
    for _ in range(attempts):
        d = [rng.randint(-4, 4) for _ in range(3)]
        norm = conic.evaluate(d)
        if norm == 0:
            continue
        polar = conic.polar(q.coords, d)
        candidate = [norm * s - 2 * polar * t for s, t in zip(q.coords, d)]
        if not any(candidate):
            continue
        cross = (
            candidate[1] * q.coords[2] - candidate[2] * q.coords[1],
            candidate[2] * q.coords[0] - candidate[0] * q.coords[2],
            candidate[0] * q.coords[1] - candidate[1] * q.coords[0],
        )
        if not any(cross):
            continue
        point = ProjPoint.primitive(candidate)
        if not conic.contains(point):
            raise ConsistencyError(
                "La reparametrización salió de la cónica",
                context={"conic": str(conic), "point": str(point)}
            )
        logger.debug("Cónica reparametrizada", extra={"conic": str(conic), "from": str(q), "to": str(point)})
        return point
    return q


def tangent_form(conic: DiagonalConic, q: ProjPoint) -> TangentForm:
    """
    Tangente de Euler X·∂Q/∂X(q) + Y·∂Q/∂Y(q) + Z·∂Q/∂Z(q), guardada primitiva.

    Raises:
        ValidationError: Si q no está en la cónica
    """
    if not conic.contains(q):
        raise ValidationError("El punto base no está en la cónica", field="q", value=q)
    gradient = [2 * coefficient * value for coefficient, value in zip(conic.coefficients, q.coords)]
    primitive = ProjPoint.primitive(gradient)
    scale = next(g // s for g, s in zip(gradient, primitive.coords) if s)
    return TangentForm(coefficients=primitive.coords, scale=scale, base_point=q, conic=conic)
