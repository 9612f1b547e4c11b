"""
Entidades del dominio de Curvas.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Tuple

from src.core.exceptions import BusinessRuleViolation, ValidationError
from src.modules.curve.domain.value_objects import CurvePoint
from src.modules.numth.domain import factorize

# Complemento cíclico (j, k) de cada índice i
CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


@dataclass(frozen=True)
class SplitCurve:
    """
    Curva y² = (x − e₁)(x − e₂)(x − e₃) con raíces enteras distintas de suma 0.

    Guarda el cambio admisible (u, r) del modelo original:
    x_original = x/u² + r, y_original = y/u³.
    """
    e1: int
    e2: int
    e3: int
    u: Fraction = Fraction(1)
    r: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("e1", "e2", "e3"):
            if not isinstance(getattr(self, name), int):
                raise ValidationError("Las raíces deben ser enteras", field=name, value=getattr(self, name))
        if self.e1 + self.e2 + self.e3 != 0:
            raise ValidationError("Las raíces deben sumar 0", field="roots", value=self.roots)
        if len(set(self.roots)) != 3:
            raise BusinessRuleViolation(
                "La curva es singular: raíces repetidas",
                rule="distinct_roots",
                code="SINGULAR_CURVE"
            )

    @property
    def roots(self) -> Tuple[int, int, int]:
        return (self.e1, self.e2, self.e3)

    def e(self, i: int) -> int:
        return self.roots[i - 1]

    @property
    def A(self) -> int:
        return self.e1 * self.e2 + self.e1 * self.e3 + self.e2 * self.e3

    @property
    def B(self) -> int:
        return -self.e1 * self.e2 * self.e3

    @property
    def disc(self) -> int:
        return ((self.e1 - self.e2) * (self.e1 - self.e3) * (self.e2 - self.e3)) ** 2

    @cached_property
    def bad_primes(self) -> Tuple[int, ...]:
        return factorize(2 * self.disc).primes

    def f(self, x: Any) -> Any:
        return (x - self.e1) * (x - self.e2) * (x - self.e3)

    def contains(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        return point.y * point.y == self.f(point.x)

    def to_original(self, point: CurvePoint) -> CurvePoint:
        """Lleva un punto racional del modelo normalizado al modelo de entrada."""
        if point.is_infinity:
            return point
        return CurvePoint(point.x / self.u ** 2 + self.r, point.y / self.u ** 3)

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.A})x + ({self.B})"
