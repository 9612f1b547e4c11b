"""
Value Objects del dominio de Cónicas.
Los VOs son inmutables y encapsulan reglas de validación.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from typing import Any, Optional, Sequence, Tuple

from src.core.exceptions import ValidationError
from src.modules.curve.domain import CYCLIC, SplitCurve, SquareClassTriple
from src.modules.numth.domain import factorize


@dataclass(frozen=True)
class ConicProvenance:
    """Origen de una cónica H_i: curva, terna β e índice i."""
    curve: SplitCurve
    beta: SquareClassTriple
    index: int

    def __post_init__(self):
        if self.index not in CYCLIC:
            raise ValidationError("El índice debe ser 1, 2 o 3", field="index", value=self.index)


@dataclass(frozen=True)
class NormalForm:
    """
    Coeficientes libres de cuadrados y coprimos dos a dos, con el cambio
    de coordenadas original = scales ⊙ normalizadas.
    """
    coefficients: Tuple[int, int, int]
    scales: Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class ProjPoint:
    """
    Punto de P² con coordenadas enteras primitivas.
    Reglas:
    - no todas nulas
    - mcd de las coordenadas igual a 1
    """
    coords: Tuple[int, int, int]

    def __post_init__(self):
        if len(self.coords) != 3 or not any(self.coords):
            raise ValidationError("Un punto proyectivo necesita tres coordenadas no todas nulas", field="coords", value=self.coords)
        if reduce(gcd, self.coords) != 1:
            raise ValidationError("Las coordenadas deben ser primitivas", field="coords", value=self.coords)

    @classmethod
    def primitive(cls, values: Sequence[Any]) -> "ProjPoint":
        """Limpia denominadores, divide por el mcd y fija el signo del primer no nulo."""
        fractions = [Fraction(v) for v in values]
        denominator = reduce(lambda acc, q: acc * q.denominator // gcd(acc, q.denominator), fractions, 1)
        integers = [int(q * denominator) for q in fractions]
        content = reduce(gcd, integers)
        if content == 0:
            raise ValidationError("Punto nulo", field="coords", value=values)
        integers = [n // content for n in integers]
        leading = next(n for n in integers if n)
        if leading < 0:
            integers = [-n for n in integers]
        return cls(tuple(integers))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "({}:{}:{})".format(*self.coords)


@dataclass(frozen=True)
class DiagonalConic:
    """
    Cónica a·X² + b·Y² + c·Z² = 0 con coeficientes enteros no nulos.
    """
    a: int
    b: int
    c: int
    provenance: Optional[ConicProvenance] = None

    def __post_init__(self):
        for name in ("a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, int) or value == 0:
                raise ValidationError("Los coeficientes deben ser enteros no nulos", field=name, value=value)

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def evaluate(self, point: Sequence[Any]) -> Any:
        X, Y, Z = point
        return self.a * X * X + self.b * Y * Y + self.c * Z * Z

    def polar(self, p: Sequence[Any], q: Sequence[Any]) -> Any:
        """Forma bilineal asociada B(p, q) con B(p, p) = Q(p)."""
        return self.a * p[0] * q[0] + self.b * p[1] * q[1] + self.c * p[2] * q[2]

    def contains(self, point: ProjPoint) -> bool:
        return self.evaluate(point.coords) == 0

    @cached_property
    def normal_form(self) -> NormalForm:
        """Normalización estándar para el criterio de Legendre."""
        coefficients = [self.a, self.b, self.c]
        scales = [Fraction(1)] * 3
        for t, value in enumerate(coefficients):
            factorization = factorize(value)
            core, root = factorization.sign, 1
            for p, e in factorization:
                core *= p ** (e % 2)
                root *= p ** (e // 2)
            coefficients[t] = core
            scales[t] /= root
        common = reduce(gcd, coefficients)
        coefficients = [value // common for value in coefficients]
        changed = True
        while changed:
            changed = False
            for s, t, w in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
                g = gcd(coefficients[s], coefficients[t])
                if g > 1:
                    # p | a, b obliga p | Z: se sustituye Z = g·Z'
                    coefficients[s] //= g
                    coefficients[t] //= g
                    coefficients[w] *= g
                    scales[w] *= g
                    changed = True
        return NormalForm(tuple(coefficients), tuple(scales))

    def ambient_diagonal(self) -> Tuple[int, int, int, int]:
        """Coeficientes de Γ₁², Γ₂², Γ₃², T² en P³ (requiere procedencia)."""
        if self.provenance is None:
            raise ValidationError("La cónica no tiene procedencia", field="provenance", value=None)
        j, k = CYCLIC[self.provenance.index]
        result = [0, 0, 0, self.c]
        result[j - 1] = self.a
        result[k - 1] = self.b
        return tuple(result)

    def __str__(self) -> str:
        return f"{self.a}X^2 + {self.b}Y^2 + {self.c}Z^2"


@dataclass(frozen=True)
class TangentForm:
    """
    Forma tangente primitiva en la base q de la cónica.

    La tangente de Euler (2aX*, 2bY*, 2cZ*) es scale · coefficients.
    """
    coefficients: Tuple[int, int, int]
    scale: int
    base_point: ProjPoint
    conic: DiagonalConic

    def __post_init__(self):
        if not any(self.coefficients):
            raise ValidationError("La forma tangente no puede ser nula", field="coefficients", value=self.coefficients)
        if self.scale == 0:
            raise ValidationError("La escala no puede ser nula", field="scale", value=self.scale)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """Evalúa en (X, Y, Z); acepta racionales, p-ádicos o intervalos."""
        terms = [c * value for c, value in zip(self.coefficients, point) if c]
        return reduce(lambda acc, term: acc + term, terms)

    def ambient_gamma(self) -> Tuple[int, int, int, int]:
        """Coeficientes en (Γ₁, Γ₂, Γ₃, T)."""
        if self.conic.provenance is None:
            raise ValidationError("La cónica no tiene procedencia", field="provenance", value=None)
        j, k = CYCLIC[self.conic.provenance.index]
        result = [0, 0, 0, self.coefficients[2]]
        result[j - 1] = self.coefficients[0]
        result[k - 1] = self.coefficients[1]
        return tuple(result)

    def ambient_u(self) -> Tuple[int, int, int, int]:
        """Coeficientes en (U₁, U₂, U₃, T) vía Γ_m = U₁ + U₂e_m + U₃e_m²."""
        gamma = self.ambient_gamma()
        roots = self.conic.provenance.curve.roots
        return (
            sum(gamma[m] for m in range(3)),
            sum(gamma[m] * roots[m] for m in range(3)),
            sum(gamma[m] * roots[m] ** 2 for m in range(3)),
            gamma[3],
        )

    def evaluate_ambient(self, gammas: Sequence[Any], t: Any = 1) -> Any:
        """Evalúa en (Γ₁, Γ₂, Γ₃, T)."""
        coefficients = self.ambient_gamma()
        values = list(gammas) + [t]
        terms = [c * value for c, value in zip(coefficients, values) if c]
        return reduce(lambda acc, term: acc + term, terms)

    def __str__(self) -> str:
        return "{}X + {}Y + {}Z".format(*self.coefficients)
