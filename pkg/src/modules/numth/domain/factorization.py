"""
Factorización de enteros y valoraciones p-ádicas exactas.

La factorización delega en sympy y verifica la primalidad de cada factor;
un compuesto superviviente es un error explícito, nunca una respuesta falsa.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Tuple, Union

from sympy import factorint, isprime, multiplicity

from src.core.config import settings
from src.core.exceptions import FactorizationIncompleteError, ValidationError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Factorization:
    """Signo y multiconjunto ordenado de pares (primo, exponente)."""
    sign: int
    factors: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        result = self.sign
        for p, e in self.factors:
            result *= p ** e
        return result

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.factors)


@lru_cache(maxsize=8192)
def _factor_abs(m: int, trial_limit: int) -> Tuple[Tuple[int, int], ...]:
    if m == 1:
        return ()
    parts = factorint(m, limit=trial_limit)
    for p in parts:
        if not isprime(p):
            raise FactorizationIncompleteError(m, p)
    return tuple(sorted((int(p), int(e)) for p, e in parts.items()))


def factorize(n: int, *, trial_limit: Optional[int] = None) -> Factorization:
    """
    Factoriza un entero no nulo.

    Args:
        n: Entero no nulo
        trial_limit: Esfuerzo de factorización (por defecto el de la configuración)

    Returns:
        Factorization con signo y pares (primo, exponente) ordenados

    Raises:
        ValidationError: Si n es 0
        FactorizationIncompleteError: Si queda un factor compuesto
    """
    n = int(n)
    if n == 0:
        raise ValidationError("No se puede factorizar 0", field="n", value=n)
    limit = trial_limit or settings.factor_trial_limit
    return Factorization(sign=1 if n > 0 else -1, factors=_factor_abs(abs(n), limit))


def prime_support(*values: Rational) -> Tuple[int, ...]:
    """Primos que dividen numerador o denominador de alguno de los valores no nulos."""
    primes = set()
    for value in values:
        q = Fraction(value)
        if q == 0:
            continue
        primes.update(factorize(q.numerator).primes)
        primes.update(factorize(q.denominator).primes)
    return tuple(sorted(primes))


def valuation(value: Rational, p: int) -> int:
    """Valoración p-ádica de un racional no nulo."""
    q = Fraction(value)
    if q == 0:
        raise ValidationError("La valoración de 0 no está definida", field="value", value=value)
    return int(multiplicity(p, abs(q.numerator))) - int(multiplicity(p, q.denominator))


def split_prime(value: Rational, p: int) -> Tuple[int, Fraction]:
    """Descompone q = p^v · u con u unidad p-ádica."""
    v = valuation(value, p)
    return v, Fraction(value) / Fraction(p) ** v


def squarefree_kernel(n: int) -> int:
    """Parte libre de cuadrados (con signo) de un entero no nulo."""
    factorization = factorize(n)
    result = factorization.sign
    for p, e in factorization:
        if e % 2:
            result *= p
    return result


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for _, e in factorize(n))
