"""
Aritmética local de los 2-cubrimientos: imagen local de Kummer,
resolubilidad local y búsqueda de puntos locales.
"""
import logging
import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from src.core.config import settings
from src.core.exceptions import (
    IndistinguishableFromZeroError,
    PrecisionExhaustedError,
    SearchExhaustedError,
)
from src.modules.conic.domain import TangentForm
from src.modules.curve.domain import CYCLIC, SplitCurve, SquareClassTriple
from src.modules.numth.domain import (
    PAdicNumber,
    Place,
    PrecisionPolicy,
    RealInterval,
    class_dimension,
    is_square_local,
    local_class_vector,
    padic_sqrt,
    valuation,
)
from src.modules.numth.domain import gf2
from src.modules.selmer.domain.entities import TwoCovering
from src.modules.selmer.domain.value_objects import LocalCoveringPoint

logger = logging.getLogger(__name__)


def image_dimension(v: Place) -> int:
    """Dimensión de E(Q_v)/2E(Q_v) con 2-torsión racional."""
    if v.is_infinite:
        return 1
    return 3 if v.prime == 2 else 2


def pair_vector(values: Sequence[Fraction], v: Place) -> Tuple[int, ...]:
    """Coordenadas locales de (b₁, b₂); la tercera componente queda determinada."""
    return local_class_vector(values[0], v) + local_class_vector(values[1], v)


def _kummer_values(curve: SplitCurve, x: Fraction) -> List[Fraction]:
    values = []
    for m in (1, 2, 3):
        if x == curve.e(m):
            j, k = CYCLIC[m]
            values.append(Fraction((curve.e(m) - curve.e(j)) * (curve.e(m) - curve.e(k))))
        else:
            values.append(x - curve.e(m))
    return values


def _exponents(bound: int) -> Iterator[int]:
    yield 0
    for m in range(1, bound + 1):
        yield m
        yield -m


def abscissae(curve: SplitCurve, p: int, level: int) -> Iterator[Fraction]:
    """
    Abscisas x = c + u·p^m con c ∈ {0, e₁, e₂, e₃}, u unidad módulo p^digits.

    El nivel amplía el rango de m y el número de dígitos.
    """
    reach = 2 * valuation(curve.disc, p) + 4 + 2 * level
    digits = (3 if p == 2 else 1) + level
    centres = sorted({0, *curve.roots})
    units = [u for u in range(1, p ** digits) if u % p]
    for m in _exponents(reach):
        power = Fraction(p) ** m
        for c in centres:
            for u in units:
                yield c + u * power


@lru_cache(maxsize=256)
def local_image(curve: SplitCurve, v: Place) -> Tuple[Tuple[int, ...], ...]:
    """
    Base de la imagen de E(Q_v)/2E(Q_v) en pares de clases locales.

    Se muestrean puntos locales (la 2-torsión y abscisas con f(x) cuadrado)
    hasta alcanzar la dimensión conocida.

    Raises:
        SearchExhaustedError: Si tras todos los niveles falta dimensión
    """
    target = image_dimension(v)
    width = 2 * class_dimension(v)
    rows: List[Tuple[int, ...]] = []

    def offer(x: Fraction) -> bool:
        vector = pair_vector(_kummer_values(curve, x), v)
        if not gf2.in_span(gf2.as_gf2(rows, width), vector):
            rows.append(vector)
        return len(rows) == target

    for root in curve.roots:
        if offer(Fraction(root)):
            return tuple(rows)
    if v.is_infinite:
        raise SearchExhaustedError("La torsión no genera la imagen real", context={"curve": str(curve)})

    for level in range(settings.local_search_levels + 1):
        for x in abscissae(curve, v.prime, level):
            value = curve.f(x)
            if value != 0 and is_square_local(value, v) and offer(x):
                logger.debug(
                    "Imagen local completa",
                    extra={"curve": str(curve), "place": str(v), "level": level}
                )
                return tuple(rows)
    raise SearchExhaustedError(
        f"Imagen local incompleta en {v}",
        context={"curve": str(curve), "place": str(v), "found": len(rows), "expected": target}
    )


def admissible_interval(beta: SquareClassTriple, curve: SplitCurve) -> Optional[Tuple[Fraction, Optional[Fraction]]]:
    """
    Región real {x : signo(x − e_i) = signo(β_i)} como (lo, hi); hi None si no está acotada.

    Returns:
        None si la región es vacía
    """
    lower = [curve.e(i) for i in (1, 2, 3) if beta.component(i) > 0]
    upper = [curve.e(i) for i in (1, 2, 3) if beta.component(i) < 0]
    lo = Fraction(max(lower))
    hi = Fraction(min(upper)) if upper else None
    if hi is not None and lo >= hi:
        return None
    return (lo, hi)


def is_locally_soluble(cov: TwoCovering, v: Place) -> bool:
    """D_β tiene puntos sobre Q_v."""
    if v.is_infinite:
        return admissible_interval(cov.beta, cov.curve) is not None
    vector = pair_vector([Fraction(b) for b in cov.beta.reps], v)
    return gf2.in_span(gf2.as_gf2(local_image(cov.curve, v), len(vector)), vector)


def _real_abscissae(lo: Fraction, hi: Optional[Fraction], depth: int = 12) -> Iterator[Fraction]:
    width = (hi - lo) if hi is not None else Fraction(1)
    for k in range(1, depth + 1):
        for t in range(1, 2 ** k, 2):
            yield lo + width * Fraction(t, 2 ** k)
        if hi is None:
            yield lo + Fraction(2 ** k)


def _real_point(cov: TwoCovering, x: Fraction, bits: int) -> LocalCoveringPoint:
    w = tuple(
        RealInterval.sqrt((x - cov.curve.e(i)) / cov.beta.component(i), bits)
        for i in (1, 2, 3)
    )
    return LocalCoveringPoint(Place.infinite(), x, w, cov.beta, cov.curve, bits)


def _padic_point(cov: TwoCovering, v: Place, x: Fraction, precision: int) -> Optional[LocalCoveringPoint]:
    w = []
    for i in (1, 2, 3):
        root = padic_sqrt((x - cov.curve.e(i)) / cov.beta.component(i), v.prime, precision)
        if root is None:
            return None
        w.append(root)
    return LocalCoveringPoint(v, x, tuple(w), cov.beta, cov.curve, precision)


def _avoids(point: LocalCoveringPoint, avoid: Sequence[TangentForm]) -> bool:
    """Todas las formas son claramente no nulas en el punto."""
    needed = max(3, point.precision // 2)
    for form in avoid:
        try:
            value = point.evaluate(form)
        except IndistinguishableFromZeroError:
            return False
        if isinstance(value, RealInterval):
            if value.sign() is None:
                return False
        elif isinstance(value, PAdicNumber) and value.precision < needed:
            return False
    return True


def _shuffled(values: Iterator[Fraction], rng: Optional[random.Random], chunk: int = 64) -> Iterator[Fraction]:
    if rng is None:
        yield from values
        return
    batch = []
    for value in values:
        batch.append(value)
        if len(batch) == chunk:
            rng.shuffle(batch)
            yield from batch
            batch = []
    rng.shuffle(batch)
    yield from batch


def local_point(
    cov: TwoCovering,
    v: Place,
    avoid: Sequence[TangentForm] = (),
    policy: Optional[PrecisionPolicy] = None,
    rng: Optional[random.Random] = None
) -> LocalCoveringPoint:
    """
    Punto afín de D_β sobre Q_v en el que ninguna forma de avoid se anula.

    Args:
        cov: 2-cubrimiento localmente resoluble en v
        v: Lugar
        avoid: Formas tangentes que deben ser no nulas en el punto
        policy: Política de precisión (por defecto la de la configuración)
        rng: Reordena los candidatos para obtener otro punto

    Raises:
        SearchExhaustedError: Si ningún candidato sirve
        PrecisionExhaustedError: Si la escalada supera el tope
    """
    policy = policy or PrecisionPolicy.from_settings()
    if v.is_infinite:
        return _local_point_real(cov, avoid, policy, rng)

    p = v.prime
    base = policy.initial(p, cov.curve.disc)
    examined = 0
    for level in range(settings.local_search_levels + 1):
        for x in _shuffled(abscissae(cov.curve, p, level), rng):
            if x in cov.curve.roots:
                continue
            if not all(is_square_local((x - cov.curve.e(i)) / cov.beta.component(i), v) for i in (1, 2, 3)):
                continue
            examined += 1
            precision = base
            for attempt in range(2):
                point = _padic_point(cov, v, x, precision)
                if point is not None and _avoids(point, avoid):
                    logger.debug(
                        "Punto local encontrado",
                        extra={"place": str(v), "beta": str(cov.beta), "x": str(x), "precision": precision}
                    )
                    return point
                if attempt == 0:
                    try:
                        precision = policy.escalate(precision)
                    except PrecisionExhaustedError:
                        break
    raise SearchExhaustedError(
        f"Sin punto local en {v}",
        context={"curve": str(cov.curve), "beta": str(cov.beta), "place": str(v), "examined": examined}
    )


def _local_point_real(
    cov: TwoCovering,
    avoid: Sequence[TangentForm],
    policy: PrecisionPolicy,
    rng: Optional[random.Random]
) -> LocalCoveringPoint:
    region = admissible_interval(cov.beta, cov.curve)
    if region is None:
        raise SearchExhaustedError(
            "D_β no tiene puntos reales",
            context={"curve": str(cov.curve), "beta": str(cov.beta), "place": "inf"}
        )
    lo, hi = region
    for x in _shuffled(_real_abscissae(lo, hi), rng):
        bits = policy.real_bits
        while True:
            point = _real_point(cov, x, bits)
            if _avoids(point, avoid):
                return point
            if bits >= 16 * policy.real_bits:
                break
            bits *= 2
    raise SearchExhaustedError(
        "Sin punto real que evite las formas tangentes",
        context={"curve": str(cov.curve), "beta": str(cov.beta), "place": "inf"}
    )
