"""
Value Objects del dominio de Curvas.
Los VOs son inmutables y encapsulan reglas de validación.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from src.core.exceptions import ValidationError
from src.modules.numth.domain import PAdicNumber, RealInterval, SquareClass, squarefree_part


def coordinate_context(value: Any) -> str:
    """Nombre del cuerpo de coordenadas de un valor."""
    if isinstance(value, (int, Fraction)):
        return "rational"
    if isinstance(value, PAdicNumber):
        return f"padic:{value.prime}"
    if isinstance(value, RealInterval):
        return "real"
    modulus = getattr(value, "mod", None)
    if modulus is not None:
        return f"finite_field:{modulus}"
    raise ValidationError(f"Coordenada de tipo no soportado: {type(value).__name__}", field="coordinate", value=value)


@dataclass(frozen=True)
class CurvePoint:
    """
    Punto de la curva: T₀ (infinito) o afín (x, y).
    Reglas:
    - x e y presentes a la vez o ausentes a la vez
    - ambas coordenadas en el mismo contexto de cuerpo
    """
    x: Optional[Any] = None
    y: Optional[Any] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValidationError("Un punto afín necesita ambas coordenadas", field="y", value=self.y)
        if self.x is None:
            return
        if isinstance(self.x, int):
            object.__setattr__(self, "x", Fraction(self.x))
        if isinstance(self.y, int):
            object.__setattr__(self, "y", Fraction(self.y))
        if coordinate_context(self.x) != coordinate_context(self.y):
            raise ValidationError("Coordenadas en contextos distintos", field="y", value=self.y)

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls()

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def context(self) -> str:
        return "infinity" if self.is_infinity else coordinate_context(self.x)

    def __str__(self) -> str:
        return "T0" if self.is_infinity else f"({self.x}, {self.y})"


@dataclass(frozen=True)
class SquareClassTriple:
    """
    Elemento de H¹ en el caso escindido: (β₁, β₂, β₃) con producto cuadrado.
    """
    b1: SquareClass
    b2: SquareClass
    b3: SquareClass

    def __post_init__(self):
        if self.b1 * self.b2 != self.b3:
            raise ValidationError(
                f"La terna ({self.b1}, {self.b2}, {self.b3}) no cumple la condición de norma",
                field="b3",
                value=self.b3
            )

    @classmethod
    def from_ints(cls, b1: int, b2: int, b3: int) -> "SquareClassTriple":
        return cls(squarefree_part(b1), squarefree_part(b2), squarefree_part(b3))

    @classmethod
    def from_values(cls, values) -> "SquareClassTriple":
        first, second, third = values
        return cls.from_ints(first, second, third)

    @classmethod
    def trivial(cls) -> "SquareClassTriple":
        return cls.from_ints(1, 1, 1)

    def __mul__(self, other: "SquareClassTriple") -> "SquareClassTriple":
        return SquareClassTriple(self.b1 * other.b1, self.b2 * other.b2, self.b3 * other.b3)

    def component(self, i: int) -> int:
        """β_i con índice 1, 2 o 3."""
        return self.reps[i - 1]

    @property
    def reps(self) -> Tuple[int, int, int]:
        return (self.b1.rep, self.b2.rep, self.b3.rep)

    @property
    def is_trivial(self) -> bool:
        return self.reps == (1, 1, 1)

    def __str__(self) -> str:
        return f"({self.b1}, {self.b2}, {self.b3})"
