"""
Clases de cuadrados: parte libre de cuadrados, cuadrados locales y
raíces cuadradas p-ádicas.
"""
from fractions import Fraction
from typing import Optional, Tuple, Union

from sympy.ntheory import legendre_symbol, sqrt_mod

from src.core.config import settings
from src.core.exceptions import PrecisionExhaustedError, ValidationError
from src.modules.numth.domain.factorization import split_prime, squarefree_kernel
from src.modules.numth.domain.value_objects import PAdicNumber, Place, SquareClass

Rational = Union[int, Fraction]


def _nonzero(q: Rational, field: str = "q") -> Fraction:
    value = Fraction(q)
    if value == 0:
        raise ValidationError("Se requiere un racional no nulo", field=field, value=q)
    return value


def squarefree_part(q: Rational) -> SquareClass:
    """
    Representante libre de cuadrados de la clase de q en Q*/(Q*)².

    Examples:
        18 → 2, 49/4 → 1, −75 → −3
    """
    value = _nonzero(q)
    # n/d y n·d están en la misma clase
    return SquareClass(squarefree_kernel(value.numerator * value.denominator))


def unit_residue(q: Rational, p: int, digits: int) -> Tuple[int, int]:
    """(valoración, unidad módulo p^digits) de un racional no nulo."""
    v, unit = split_prime(_nonzero(q), p)
    modulus = p ** digits
    return v, (unit.numerator * pow(unit.denominator, -1, modulus)) % modulus


def is_square_local(q: Rational, v: Place) -> bool:
    """
    Indica si q es un cuadrado en la compleción Q_v.

    Valoración par y, para la unidad, símbolo de Legendre (p impar)
    o congruencia 1 mod 8 (p = 2).
    """
    value = _nonzero(q)
    if v.is_infinite:
        return value > 0
    p = v.prime
    digits = 3 if p == 2 else 1
    valuation, unit = unit_residue(value, p, digits)
    if valuation % 2:
        return False
    if p == 2:
        return unit == 1
    return legendre_symbol(unit, p) == 1


def padic_sqrt(q: Rational, p: int, precision: int, *, cap: Optional[int] = None) -> Optional[PAdicNumber]:
    """
    Raíz cuadrada p-ádica de q con la precisión relativa pedida.

    Args:
        q: Racional no nulo
        p: Primo
        precision: Dígitos relativos de la raíz
        cap: Tope de precisión (por defecto el de la configuración)

    Returns:
        PAdicNumber r con r² ≡ q, o None si q no es un cuadrado en Q_p

    Raises:
        PrecisionExhaustedError: Si precision supera el tope
    """
    cap = cap or settings.precision_cap
    if precision < 1:
        raise ValidationError("La precisión debe ser positiva", field="precision", value=precision)
    if precision > cap:
        raise PrecisionExhaustedError(
            f"Precisión {precision} por encima del tope",
            precision=precision,
            cap=cap
        )
    value = _nonzero(q)
    if not is_square_local(value, Place.finite(p)):
        return None
    # en p = 2 la raíz módulo 2^(N+1) solo queda determinada módulo 2^N
    digits = precision + 1 if p == 2 else precision
    valuation, unit = unit_residue(value, p, digits)
    root = int(sqrt_mod(unit, p ** digits))
    modulus = p ** precision
    return PAdicNumber(prime=p, valuation=valuation // 2, unit=root % modulus, precision=precision)


def local_class_vector(q: Rational, v: Place) -> Tuple[int, ...]:
    """
    Coordenadas de q en Q_v*/(Q_v*)² como vector sobre F₂.

    ∞: (signo); p impar: (paridad de v_p, no-residuo); p = 2: (paridad, bit de −1, bit de 5).
    """
    value = _nonzero(q)
    if v.is_infinite:
        return (1 if value < 0 else 0,)
    p = v.prime
    if p == 2:
        valuation, unit = unit_residue(value, 2, 3)
        minus_bit = 1 if unit in (3, 7) else 0
        five_bit = 1 if unit in (3, 5) else 0
        return (valuation % 2, minus_bit, five_bit)
    valuation, unit = unit_residue(value, p, 1)
    return (valuation % 2, 0 if legendre_symbol(unit, p) == 1 else 1)


def class_dimension(v: Place) -> int:
    """Dimensión de Q_v*/(Q_v*)² sobre F₂."""
    if v.is_infinite:
        return 1
    return 3 if v.prime == 2 else 2
