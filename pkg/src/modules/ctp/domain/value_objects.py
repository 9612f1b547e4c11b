"""
Value Objects del dominio del emparejamiento de Cassels-Tate.
Los VOs son inmutables y encapsulan reglas de validación.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from src.core.exceptions import ValidationError
from src.modules.curve.domain import SquareClassTriple
from src.modules.numth.domain import PAdicNumber, Place, RealInterval

LocalValue = Union[PAdicNumber, RealInterval]


@dataclass(frozen=True)
class PairingValue:
    """
    Valor en ½Z/Z guardado como bit: 0 ↔ +1, ½ ↔ −1 vía v ↦ (−1)^{2v}.
    """
    bit: int

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise ValidationError("El valor debe ser un bit", field="bit", value=self.bit)

    @classmethod
    def from_sign(cls, sign: int) -> "PairingValue":
        if sign not in (1, -1):
            raise ValidationError("El signo debe ser ±1", field="sign", value=sign)
        return cls(0 if sign == 1 else 1)

    @property
    def sign(self) -> int:
        return -1 if self.bit else 1

    @property
    def half_integer(self) -> Fraction:
        return Fraction(self.bit, 2)

    def __add__(self, other: "PairingValue") -> "PairingValue":
        return PairingValue(self.bit ^ other.bit)

    def __str__(self) -> str:
        return "1/2" if self.bit else "0"


@dataclass(frozen=True)
class LocalFactorRecord:
    """Factor local ∏_i (L_i(q_v), β'_i)_v de un par de elementos."""
    place: Place
    left: SquareClassTriple
    right: SquareClassTriple
    factor: int

    def __post_init__(self):
        if self.factor not in (1, -1):
            raise ValidationError("El factor local debe ser ±1", field="factor", value=self.factor)


@dataclass(frozen=True)
class DeltaWitness:
    """
    Testigo de s_kj·δ_{v,i} = −c_i·L_i(q_v), con L_i la forma primitiva y
    c_i el contenido retirado de la tangente de Euler.
    """
    place: Place
    index: int
    delta: LocalValue
    tangent_value: LocalValue
    scale: int
    tangent_scale: int


@dataclass(frozen=True)
class PairingMatrix:
    """
    Matriz del emparejamiento en una base de Selmer.

    Reglas:
    - matriz cuadrada de bits del tamaño de la base
    - kernel_basis contenido en la base generada (se expresa como ternas)
    """
    basis: Tuple[SquareClassTriple, ...]
    entries: Tuple[Tuple[int, ...], ...]
    kernel_basis: Tuple[SquareClassTriple, ...]

    def __post_init__(self):
        size = len(self.basis)
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValidationError("La matriz no es cuadrada del tamaño de la base", field="entries", value=self.entries)
        if any(bit not in (0, 1) for row in self.entries for bit in row):
            raise ValidationError("Las entradas deben ser bits", field="entries", value=self.entries)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel_basis)

    @property
    def rank(self) -> int:
        return self.dim - self.kernel_dim

    @property
    def naive_rank_bound(self) -> int:
        return self.dim - 2

    @property
    def refined_rank_bound(self) -> int:
        return self.kernel_dim - 2

    @property
    def signs(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(-1 if bit else 1 for bit in row) for row in self.entries)

    def is_symmetric(self) -> bool:
        return all(self.entries[r][s] == self.entries[s][r] for r in range(self.dim) for s in range(self.dim))

    def has_zero_diagonal(self) -> bool:
        return all(self.entries[r][r] == 0 for r in range(self.dim))
