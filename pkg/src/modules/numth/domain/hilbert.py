"""
Símbolo de Hilbert cuadrático (a, b)_v sobre Q.

Fórmulas cerradas: símbolo de Legendre para p impar, exponente ε/ω en
p = 2 y regla de signos en ∞. Nunca por búsqueda.
"""
from fractions import Fraction
from typing import Tuple, Union

from sympy.ntheory import legendre_symbol

from src.core.exceptions import IndistinguishableFromZeroError, ValidationError
from src.modules.numth.domain.squares import unit_residue
from src.modules.numth.domain.value_objects import PAdicNumber, Place, RealInterval

LocalValue = Union[int, Fraction, PAdicNumber, RealInterval]


def _sign(value: LocalValue) -> int:
    if isinstance(value, RealInterval):
        sign = value.sign()
        if sign is None:
            raise IndistinguishableFromZeroError(
                "El signo del intervalo no está decidido",
                context={"interval": str(value)}
            )
        return sign
    if isinstance(value, PAdicNumber):
        raise ValidationError("Un número p-ádico no tiene signo real", field="value", value=value)
    q = Fraction(value)
    if q == 0:
        raise ValidationError("El símbolo de Hilbert exige argumentos no nulos", field="value", value=value)
    return 1 if q > 0 else -1


def _parts(value: LocalValue, p: int) -> Tuple[int, int]:
    digits = 3 if p == 2 else 1
    if isinstance(value, PAdicNumber):
        if value.prime != p:
            raise ValidationError("Primo del número distinto del lugar", field="prime", value=value.prime)
        return value.valuation, value.residue(digits)
    if isinstance(value, RealInterval):
        raise ValidationError("Un intervalo real no vive en Q_p", field="value", value=value)
    q = Fraction(value)
    if q == 0:
        raise ValidationError("El símbolo de Hilbert exige argumentos no nulos", field="value", value=value)
    return unit_residue(q, p, digits)


def hilbert_symbol(a: LocalValue, b: LocalValue, v: Place) -> int:
    """
    Calcula (a, b)_v ∈ {+1, −1}.

    Args:
        a: Racional no nulo (o PAdicNumber en p, o RealInterval en ∞)
        b: Racional no nulo (o PAdicNumber en p, o RealInterval en ∞)
        v: Lugar de Q

    Returns:
        +1 si z² = a·x² + b·y² tiene solución no trivial en Q_v, −1 si no

    Raises:
        IndistinguishableFromZeroError: Si algún argumento local es un pseudo-cero
    """
    if v.is_infinite:
        return -1 if _sign(a) < 0 and _sign(b) < 0 else 1

    p = v.prime
    alpha, u = _parts(a, p)
    beta, w = _parts(b, p)
    if p == 2:
        def eps(t: int) -> int:
            return ((t - 1) // 2) % 2

        def omega(t: int) -> int:
            return ((t * t - 1) // 8) % 2

        exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
        return -1 if exponent % 2 else 1

    result = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        result *= legendre_symbol(u, p)
    if alpha % 2:
        result *= legendre_symbol(w, p)
    return result
