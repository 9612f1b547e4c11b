"""
Tests unitarios para el dominio de aritmética: factorización, clases de
cuadrados, símbolo de Hilbert, números p-ádicos y álgebra sobre F₂.
"""
import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Tuple

import numpy as np
import pytest
from sympy import primerange

from src.core.exceptions import (
    IndistinguishableFromZeroError,
    PrecisionExhaustedError,
    ValidationError,
)
from src.modules.numth.domain import (
    PAdicNumber,
    Place,
    PrecisionPolicy,
    RealInterval,
    SquareClass,
    factorize,
    hilbert_symbol,
    is_square_local,
    local_class_vector,
    padic_sqrt,
    prime_support,
    squarefree_part,
    valuation,
)
from src.modules.numth.domain import gf2


class TestFactorization:
    """Tests para la factorización y las valoraciones."""

    def test_factorize_negative(self):
        """Debe devolver signo y pares ordenados."""
        result = factorize(-360)
        assert result.sign == -1
        assert result.factors == ((2, 3), (3, 2), (5, 1))
        assert result.value == -360

    def test_factorize_one(self):
        """Debe factorizar 1 como producto vacío."""
        assert factorize(1).factors == ()

    def test_factorize_zero(self):
        """Debe rechazar el 0."""
        with pytest.raises(ValidationError, match="No se puede factorizar 0"):
            factorize(0)

    def test_valuation_of_fraction(self):
        """Debe restar la valoración del denominador."""
        assert valuation(Fraction(12, 25), 5) == -2
        assert valuation(Fraction(12, 25), 2) == 2

    def test_prime_support(self):
        """Debe reunir los primos de numeradores y denominadores ignorando ceros."""
        assert prime_support(Fraction(6, 35), 0, -11) == (2, 3, 5, 7, 11)


class TestSquareClasses:
    """Tests para clases de cuadrados racionales y locales."""

    @pytest.mark.parametrize("value,expected", [(18, 2), (Fraction(49, 4), 1), (-75, -3), (Fraction(3, 2), 6)])
    def test_squarefree_part(self, value, expected):
        """Debe dar el representante libre de cuadrados."""
        assert squarefree_part(value) == SquareClass(expected)

    def test_square_class_not_squarefree(self):
        """Debe rechazar representantes con factores cuadrados."""
        with pytest.raises(ValidationError, match="no es libre de cuadrados"):
            SquareClass(12)

    def test_square_class_product(self):
        """Debe multiplicar quitando el cuadrado del mcd."""
        assert SquareClass(6) * SquareClass(10) == SquareClass(15)
        assert (SquareClass(-2) * SquareClass(-2)).is_trivial

    def test_squarefree_part_zero(self):
        """Debe rechazar el 0."""
        with pytest.raises(ValidationError, match="no nulo"):
            squarefree_part(0)

    def test_local_squares(self):
        """Debe reconocer cuadrados en Q_2, Q_7 y R."""
        assert is_square_local(17, Place.finite(2))
        assert not is_square_local(5, Place.finite(2))
        assert is_square_local(2, Place.finite(7))
        assert not is_square_local(3, Place.finite(7))
        assert not is_square_local(-1, Place.infinite())

    def test_local_class_vector_at_two(self):
        """Debe codificar paridad, bit de −1 y bit de 5."""
        assert local_class_vector(-1, Place.finite(2)) == (0, 1, 0)
        assert local_class_vector(5, Place.finite(2)) == (0, 0, 1)
        assert local_class_vector(6, Place.finite(2)) == (1, 1, 1)

    def test_local_class_vector_is_homomorphism(self):
        """Debe transformar productos en sumas módulo 2."""
        for p in (2, 3, 5, 13):
            v = Place.finite(p)
            for a, b in product((-6, 3, 10, Fraction(7, 5)), repeat=2):
                left = local_class_vector(a * b, v)
                right = tuple((x + y) % 2 for x, y in zip(local_class_vector(a, v), local_class_vector(b, v)))
                assert left == right


class TestPlace:
    """Tests para el Value Object Place."""

    def test_finite_requires_prime(self):
        """Debe rechazar un lugar finito sin primo."""
        with pytest.raises(ValidationError, match="requiere un primo"):
            Place.finite(15)

    def test_parse(self):
        """Debe interpretar inf y primos."""
        assert Place.parse("inf").is_infinite
        assert Place.parse(" 7 ").prime == 7
        with pytest.raises(ValidationError, match="Lugar inválido"):
            Place.parse("x")


def _hilbert_by_search(a: int, b: int, p: int) -> int:
    """
    (a, b)_p por búsqueda de una solución primitiva de z² ≡ a·x² + b·y²
    módulo p² (p impar) o 16 (p = 2).

    Basta con esos módulos si las valoraciones de a y b son a lo sumo 1.
    """
    modulus = 16 if p == 2 else p * p
    squares = {}
    for t in range(modulus):
        squares.setdefault(t * t % modulus, []).append(t)
    for x, y in product(range(modulus), repeat=2):
        rhs = (a * x * x + b * y * y) % modulus
        for z in squares.get(rhs, ()):
            if x % p or y % p or z % p:
                return 1
    return -1


def _class_representative(a: int, p: int) -> int:
    """Representante de a en Q_p*/Q_p*² con valoración 0 o 1."""
    alpha = 0
    while a % p == 0:
        a //= p
        alpha += 1
    if p == 2:
        unit = a % 8
    else:
        residues = {t * t % p for t in range(1, p)}
        unit = 1 if a % p in residues else min(n for n in range(2, p) if n not in residues)
    return p ** (alpha % 2) * unit


@lru_cache(maxsize=None)
def _hilbert_table(p: int) -> Dict[Tuple[int, int], int]:
    units = (1, 3, 5, 7) if p == 2 else sorted({_class_representative(n, p) for n in range(1, p)})
    representatives = [p ** alpha * u for alpha in (0, 1) for u in units]
    return {(a, b): _hilbert_by_search(a, b, p) for a, b in product(representatives, repeat=2)}


class TestHilbertSymbol:
    """Tests para el símbolo de Hilbert."""

    def test_known_values(self):
        """Debe reproducir valores clásicos."""
        assert hilbert_symbol(-1, -1, Place.infinite()) == -1
        assert hilbert_symbol(-1, -1, Place.finite(2)) == -1
        assert hilbert_symbol(2, 3, Place.finite(3)) == -1
        assert hilbert_symbol(2, 3, Place.finite(2)) == -1
        assert hilbert_symbol(2, 7, Place.finite(2)) == 1

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
    def test_against_search(self, p):
        """Debe coincidir con la búsqueda de soluciones locales para todo 0 < |a|, |b| ≤ 30."""
        table = _hilbert_table(p)
        values = [n for n in range(-30, 31) if n]
        for a, b in product(values, repeat=2):
            expected = table[(_class_representative(a, p), _class_representative(b, p))]
            assert hilbert_symbol(a, b, Place.finite(p)) == expected, (a, b)

    def test_product_formula(self):
        """Debe cumplir ∏_v (a, b)_v = 1 en 500 pares aleatorios con |a|, |b| ≤ 10⁴."""
        rng = random.Random(2024)
        values = [n for n in range(-10**4, 10**4 + 1) if n]
        for _ in range(500):
            a, b = rng.choice(values), rng.choice(values)
            places = [Place.infinite()] + [Place.finite(p) for p in prime_support(2, a, b)]
            total = 1
            for v in places:
                total *= hilbert_symbol(a, b, v)
            assert total == 1, (a, b)

    def test_symmetry_and_bilinearity(self):
        """Debe ser simétrico y multiplicativo en cada argumento."""
        for p in primerange(2, 12):
            v = Place.finite(p)
            for a, b, c in product((-1, 2, 3, 5, -7), repeat=3):
                assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
                assert hilbert_symbol(a * b, c, v) == hilbert_symbol(a, c, v) * hilbert_symbol(b, c, v)

    def test_padic_argument(self):
        """Debe aceptar una aproximación p-ádica con dígitos suficientes."""
        approx = PAdicNumber.from_rational(Fraction(-7, 3), 2, 10)
        assert hilbert_symbol(approx, 3, Place.finite(2)) == hilbert_symbol(Fraction(-7, 3), 3, Place.finite(2))

    def test_undecided_interval(self):
        """Debe rechazar un intervalo real que contiene al 0."""
        with pytest.raises(IndistinguishableFromZeroError):
            hilbert_symbol(RealInterval(Fraction(-1), Fraction(1)), -1, Place.infinite())

    def test_zero_argument(self):
        """Debe rechazar argumentos nulos."""
        with pytest.raises(ValidationError, match="no nulos"):
            hilbert_symbol(0, 3, Place.finite(3))


class TestPAdicNumbers:
    """Tests para PAdicNumber, raíces p-ádicas y la política de precisión."""

    @pytest.mark.parametrize("q,p", [(2, 7), (17, 2), (Fraction(-7, 9), 2), (Fraction(11, 25), 5)])
    def test_sqrt_squares_back(self, q, p):
        """Debe devolver r con r² ≡ q a la precisión pedida."""
        root = padic_sqrt(q, p, 12)
        square = root * root
        expected = PAdicNumber.from_rational(q, p, square.precision)
        assert square.valuation == expected.valuation
        assert square.unit == expected.unit

    def test_sqrt_of_non_square(self):
        """Debe devolver None si q no es cuadrado en Q_p."""
        assert padic_sqrt(3, 7, 10) is None
        assert padic_sqrt(2, 2, 10) is None

    def test_sqrt_above_cap(self):
        """Debe lanzar PrecisionExhaustedError por encima del tope."""
        with pytest.raises(PrecisionExhaustedError):
            padic_sqrt(2, 7, 50, cap=40)

    def test_cancellation_is_detected(self):
        """Debe detectar una suma indistinguible de 0."""
        x = PAdicNumber.from_rational(1, 5, 3)
        with pytest.raises(IndistinguishableFromZeroError):
            x - PAdicNumber.from_rational(126, 5, 3)

    def test_addition_loses_precision(self):
        """Debe reducir la precisión relativa tras una cancelación parcial."""
        total = PAdicNumber.from_rational(1, 5, 6) + PAdicNumber.from_rational(-26, 5, 6)
        assert total.valuation == 2
        assert total.precision == 4
        assert total.unit == PAdicNumber.from_rational(-1, 5, 4).unit

    def test_unit_validation(self):
        """Debe rechazar unidades divisibles por el primo."""
        with pytest.raises(ValidationError, match="coprima"):
            PAdicNumber(prime=3, valuation=0, unit=6, precision=2)

    def test_policy_escalation(self):
        """Debe duplicar la precisión hasta el tope."""
        policy = PrecisionPolicy(base=20, cap=64)
        assert policy.initial(2, 64) == 20 + 2 * 7
        assert policy.escalate(20) == 40
        assert policy.escalate(40) == 64
        with pytest.raises(PrecisionExhaustedError):
            policy.escalate(64)


class TestRealInterval:
    """Tests para los encierros reales."""

    def test_sqrt_encloses(self):
        """Debe encerrar √2 con la anchura pedida."""
        root = RealInterval.sqrt(2, 40)
        assert root.lower ** 2 <= 2 <= root.upper ** 2
        assert root.width <= Fraction(1, 2 ** 40)

    def test_sign(self):
        """Debe decidir el signo solo si el intervalo no contiene al 0."""
        root = RealInterval.sqrt(2, 20)
        assert (root - 1).sign() == 1
        assert (1 - root).sign() == -1
        assert RealInterval(Fraction(-1), Fraction(1)).sign() is None


class TestGF2:
    """Tests para el álgebra lineal sobre F₂."""

    def test_rank_and_nullspace(self):
        """Debe cumplir rango + nulidad = columnas y M·x = 0 en el núcleo."""
        matrix = gf2.as_gf2([[1, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]])
        kernel = gf2.nullspace(matrix)
        assert gf2.rank(matrix) == 2
        assert kernel.shape == (2, 4)
        assert not (matrix.astype(int) @ kernel.T.astype(int) % 2).any()

    def test_solve(self):
        """Debe encontrar coordenadas o devolver None."""
        rows = gf2.as_gf2([[1, 0, 1], [0, 1, 1]])
        assert list(gf2.solve(rows, [1, 1, 0])) == [1, 1]
        assert gf2.solve(rows, [0, 0, 1]) is None

    def test_extend_independent(self):
        """Debe elegir un subconjunto maximal independiente en orden."""
        rows = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
        assert gf2.extend_independent(rows, 3) == (0, 1, 3)

    def test_empty_span(self):
        """Debe tratar el subespacio vacío como {0}."""
        empty = np.zeros((0, 3), dtype=np.uint8)
        assert gf2.in_span(empty, [0, 0, 0])
        assert not gf2.in_span(empty, [0, 1, 0])
