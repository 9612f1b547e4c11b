"""
Value Objects de aritmética local.
Los VOs son inmutables y encapsulan reglas de validación.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

from sympy import integer_nthroot, isprime, multiplicity

from src.core.exceptions import IndistinguishableFromZeroError, ValidationError
from src.modules.numth.domain.factorization import is_squarefree

Rational = Union[int, Fraction]


class PlaceKind(str, Enum):
    REAL_INFINITE = "real_infinite"
    FINITE_PRIME = "finite_prime"


@dataclass(frozen=True)
class Place:
    """
    Lugar de Q: el arquimediano ∞ o un primo p.
    Reglas:
    - prime presente si y solo si el lugar es finito
    - prime verificado como primo
    """
    kind: PlaceKind
    prime: Optional[int] = None

    def __post_init__(self):
        if self.kind is PlaceKind.REAL_INFINITE:
            if self.prime is not None:
                raise ValidationError("El lugar infinito no lleva primo", field="prime", value=self.prime)
        else:
            if self.prime is None or not isprime(self.prime):
                raise ValidationError("Un lugar finito requiere un primo", field="prime", value=self.prime)

    @classmethod
    def infinite(cls) -> "Place":
        return cls(kind=PlaceKind.REAL_INFINITE)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(kind=PlaceKind.FINITE_PRIME, prime=int(p))

    @classmethod
    def parse(cls, text: str) -> "Place":
        text = text.strip().lower()
        if text in ("inf", "oo", "∞", "infinity"):
            return cls.infinite()
        try:
            return cls.finite(int(text))
        except ValueError as exc:
            raise ValidationError(f"Lugar inválido: '{text}'", field="place", value=text, cause=exc)

    @property
    def is_infinite(self) -> bool:
        return self.kind is PlaceKind.REAL_INFINITE

    def sort_key(self) -> Tuple[int, int]:
        return (0, 0) if self.is_infinite else (1, self.prime)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.prime)


@dataclass(frozen=True)
class SquareClass:
    """
    Clase de Q*/(Q*)² representada por un entero libre de cuadrados.
    """
    rep: int

    def __post_init__(self):
        if not is_squarefree(self.rep):
            raise ValidationError(
                f"El representante {self.rep} no es libre de cuadrados",
                field="rep",
                value=self.rep
            )

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        # a·b/gcd(a,b)² es libre de cuadrados si a y b lo son
        g = gcd(self.rep, other.rep)
        return SquareClass(self.rep * other.rep // (g * g))

    @property
    def is_trivial(self) -> bool:
        return self.rep == 1

    def __int__(self) -> int:
        return self.rep

    def __str__(self) -> str:
        return str(self.rep)


@dataclass(frozen=True)
class PAdicNumber:
    """
    Número p-ádico p^valuation · unit con precisión relativa finita.
    Reglas:
    - unit reducido módulo p^precision y coprimo con p
    - precision ≥ 1
    """
    prime: int
    valuation: int
    unit: int
    precision: int

    def __post_init__(self):
        if self.precision < 1:
            raise ValidationError("La precisión debe ser positiva", field="precision", value=self.precision)
        modulus = self.prime ** self.precision
        if not 0 < self.unit < modulus or self.unit % self.prime == 0:
            raise ValidationError(
                "La unidad debe estar reducida y ser coprima con el primo",
                field="unit",
                value=self.unit
            )

    @property
    def absolute_precision(self) -> int:
        return self.valuation + self.precision

    @classmethod
    def from_rational(cls, value: Rational, prime: int, precision: int) -> "PAdicNumber":
        """Aproxima un racional no nulo con la precisión relativa pedida."""
        q = Fraction(value)
        if q == 0:
            raise ValidationError("El 0 no tiene representación p-ádica normalizada", field="value", value=value)
        num_val = int(multiplicity(prime, abs(q.numerator)))
        den_val = int(multiplicity(prime, q.denominator))
        modulus = prime ** precision
        num = q.numerator // prime ** num_val
        den = q.denominator // prime ** den_val
        unit = (num * pow(den, -1, modulus)) % modulus
        return cls(prime=prime, valuation=num_val - den_val, unit=unit, precision=precision)

    def residue(self, digits: int) -> int:
        """Unidad módulo p^digits."""
        if digits > self.precision:
            raise IndistinguishableFromZeroError(
                f"Se piden {digits} dígitos de una unidad conocida a {self.precision}",
                context={"prime": self.prime, "precision": self.precision}
            )
        return self.unit % self.prime ** digits

    def _coerce(self, other, *, for_sum: bool) -> Optional["PAdicNumber"]:
        if isinstance(other, PAdicNumber):
            if other.prime != self.prime:
                raise ValidationError("No se mezclan números de primos distintos", field="prime", value=other.prime)
            return other
        q = Fraction(other)
        if q == 0:
            return None
        v = int(multiplicity(self.prime, abs(q.numerator))) - int(multiplicity(self.prime, q.denominator))
        digits = max(self.precision, self.absolute_precision - v if for_sum else 0, 1)
        return PAdicNumber.from_rational(q, self.prime, digits)

    def __add__(self, other) -> "PAdicNumber":
        other = self._coerce(other, for_sum=True)
        if other is None:
            return self
        p = self.prime
        absolute = min(self.absolute_precision, other.absolute_precision)
        base = min(self.valuation, other.valuation)
        if absolute <= base:
            raise IndistinguishableFromZeroError(
                "Suma sin dígitos significativos",
                context={"prime": p, "absolute_precision": absolute}
            )
        modulus = p ** (absolute - base)
        total = (self.unit * p ** (self.valuation - base) + other.unit * p ** (other.valuation - base)) % modulus
        if total == 0:
            raise IndistinguishableFromZeroError(
                f"Valor indistinguible de 0 módulo {p}^{absolute}",
                context={"prime": p, "absolute_precision": absolute}
            )
        shift = int(multiplicity(p, total))
        valuation = base + shift
        precision = absolute - valuation
        return PAdicNumber(p, valuation, (total // p ** shift) % p ** precision, precision)

    __radd__ = __add__

    def __neg__(self) -> "PAdicNumber":
        modulus = self.prime ** self.precision
        return PAdicNumber(self.prime, self.valuation, (-self.unit) % modulus, self.precision)

    def __sub__(self, other) -> "PAdicNumber":
        return self + (-other)

    def __rsub__(self, other) -> "PAdicNumber":
        return (-self) + other

    def __mul__(self, other) -> "PAdicNumber":
        other = self._coerce(other, for_sum=False)
        if other is None:
            raise IndistinguishableFromZeroError("Producto por 0 exacto", context={"prime": self.prime})
        precision = min(self.precision, other.precision)
        modulus = self.prime ** precision
        return PAdicNumber(self.prime, self.valuation + other.valuation, (self.unit * other.unit) % modulus, precision)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.unit}·{self.prime}^{self.valuation} + O({self.prime}^{self.absolute_precision})"


@dataclass(frozen=True)
class RealInterval:
    """
    Encierro racional exacto [lower, upper] de un número real.

    Las decisiones de signo son rigurosas: sign() devuelve None si el
    intervalo contiene al 0.
    """
    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValidationError("Intervalo vacío", field="lower", value=self.lower)

    @classmethod
    def exact(cls, value: Rational) -> "RealInterval":
        q = Fraction(value)
        return cls(q, q)

    @classmethod
    def sqrt(cls, value: Rational, bits: int) -> "RealInterval":
        """Encierro de √q con anchura ≤ 2^-bits / denominador."""
        q = Fraction(value)
        if q < 0:
            raise ValidationError("Raíz cuadrada de un negativo", field="value", value=value)
        scale = 2 ** bits
        radicand = q.numerator * q.denominator * scale * scale
        root, exact = integer_nthroot(radicand, 2)
        root = int(root)
        denominator = q.denominator * scale
        lower = Fraction(root, denominator)
        upper = lower if exact else Fraction(root + 1, denominator)
        return cls(lower, upper)

    @staticmethod
    def _wrap(other) -> "RealInterval":
        return other if isinstance(other, RealInterval) else RealInterval.exact(other)

    def __add__(self, other) -> "RealInterval":
        other = self._wrap(other)
        return RealInterval(self.lower + other.lower, self.upper + other.upper)

    __radd__ = __add__

    def __neg__(self) -> "RealInterval":
        return RealInterval(-self.upper, -self.lower)

    def __sub__(self, other) -> "RealInterval":
        return self + (-self._wrap(other))

    def __rsub__(self, other) -> "RealInterval":
        return self._wrap(other) - self

    def __mul__(self, other) -> "RealInterval":
        other = self._wrap(other)
        products = (
            self.lower * other.lower,
            self.lower * other.upper,
            self.upper * other.lower,
            self.upper * other.upper,
        )
        return RealInterval(min(products), max(products))

    __rmul__ = __mul__

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains_zero(self) -> bool:
        return self.lower <= 0 <= self.upper

    def sign(self) -> Optional[int]:
        if self.lower > 0:
            return 1
        if self.upper < 0:
            return -1
        return None

    def __str__(self) -> str:
        return f"[{float(self.lower):.12g}, {float(self.upper):.12g}]"
