"""
Value Objects del dominio de Selmer.
Los VOs son inmutables y encapsulan reglas de validación.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterator, Optional, Tuple, Union

import numpy as np

from src.core.exceptions import IndistinguishableFromZeroError, ValidationError
from src.modules.conic.domain import TangentForm
from src.modules.curve.domain import CYCLIC, SplitCurve, SquareClassTriple
from src.modules.numth.domain import PAdicNumber, Place, RealInterval
from src.modules.numth.domain import gf2

LocalValue = Union[PAdicNumber, RealInterval]


@dataclass(frozen=True)
class LocalCoveringPoint:
    """
    Punto (w₁ : w₂ : w₃ : 1) de D_β sobre Q_v.

    Reglas:
    - x − e_i = β_i·w_i² para la abscisa racional común x
    - las w_i son PAdicNumber en un primo o RealInterval en ∞
    """
    place: Place
    x: Fraction
    w: Tuple[LocalValue, LocalValue, LocalValue]
    beta: SquareClassTriple
    curve: SplitCurve
    precision: int

    def __post_init__(self):
        if len(self.w) != 3:
            raise ValidationError("Se esperan tres coordenadas w", field="w", value=self.w)
        expected = RealInterval if self.place.is_infinite else PAdicNumber
        if not all(isinstance(value, expected) for value in self.w):
            raise ValidationError(
                f"Las coordenadas deben ser {expected.__name__} en el lugar {self.place}",
                field="w",
                value=self.w
            )

    def coordinates(self, i: int) -> Tuple[LocalValue, LocalValue, int]:
        """(Γ_j, Γ_k, T) de la cónica H_i."""
        j, k = CYCLIC[i]
        return (self.w[j - 1], self.w[k - 1], 1)

    def evaluate(self, form: TangentForm) -> LocalValue:
        """Valor de la forma tangente en el punto; puede lanzar IndistinguishableFromZeroError."""
        provenance = form.conic.provenance
        if provenance is None:
            raise ValidationError("La forma no tiene índice de cónica", field="form", value=str(form))
        return form.evaluate(self.coordinates(provenance.index))

    def recovered_x(self, i: int) -> LocalValue:
        """e_i + β_i·w_i², que debe coincidir con x para los tres índices."""
        w = self.w[i - 1]
        return self.curve.e(i) + self.beta.component(i) * (w * w)

    def satisfies_covering(self) -> bool:
        """Comprueba x − e_i = β_i·w_i² a la precisión de trabajo."""
        for i in (1, 2, 3):
            try:
                difference = self.recovered_x(i) - self.x
            except IndistinguishableFromZeroError:
                continue
            if isinstance(difference, RealInterval):
                if not difference.contains_zero():
                    return False
            else:
                return False
        return True

    def __str__(self) -> str:
        return f"q_{self.place}(x={self.x})"


def triple_vector(triple: SquareClassTriple, support: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """
    Exponentes de (β₁, β₂) sobre el soporte (−1 primero, luego los primos).

    Returns:
        Vector sobre F₂ de longitud 2·|support|, o None si β sale del soporte
    """
    vector = []
    for rep in triple.reps[:2]:
        remaining = abs(rep)
        for s in support:
            if s == -1:
                vector.append(1 if rep < 0 else 0)
            elif remaining % s == 0:
                vector.append(1)
                remaining //= s
            else:
                vector.append(0)
        if remaining != 1:
            return None
    return tuple(vector)


@dataclass(frozen=True)
class SelmerGroup:
    """
    Grupo de 2-Selmer de una curva escindida.

    Reglas:
    - la base es independiente y empieza por la imagen de la torsión
    - la imagen de la torsión está contenida en el span de la base
    """
    curve: SplitCurve
    basis: Tuple[SquareClassTriple, ...]
    torsion_image: Tuple[SquareClassTriple, ...]
    support: Tuple[int, ...]

    def __post_init__(self):
        rows = [self._vector(triple) for triple in self.basis]
        if len(gf2.extend_independent(rows, 2 * len(self.support))) != len(rows):
            raise ValidationError("La base de Selmer no es independiente", field="basis", value=self.basis)

    def _vector(self, triple: SquareClassTriple) -> Tuple[int, ...]:
        vector = triple_vector(triple, self.support)
        if vector is None:
            raise ValidationError(
                f"{triple} no está soportado en {self.support}",
                field="triple",
                value=triple
            )
        return vector

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def naive_rank_bound(self) -> int:
        return self.dim - 2

    def coordinates(self, triple: SquareClassTriple) -> Optional[Tuple[int, ...]]:
        """Coordenadas en la base, o None si la terna no está en el grupo."""
        vector = triple_vector(triple, self.support)
        if vector is None:
            return None
        if not self.basis:
            return () if not any(vector) else None
        rows = np.array([self._vector(b) for b in self.basis], dtype=np.uint8)
        solution = gf2.solve(rows, vector)
        return None if solution is None else tuple(int(bit) for bit in solution)

    def contains(self, triple: SquareClassTriple) -> bool:
        return self.coordinates(triple) is not None

    def combine(self, coordinates) -> SquareClassTriple:
        chosen = [b for b, bit in zip(self.basis, coordinates) if int(bit) % 2]
        return reduce(lambda acc, t: acc * t, chosen, SquareClassTriple.trivial())

    def elements(self) -> Iterator[SquareClassTriple]:
        for bits in product((0, 1), repeat=self.dim):
            yield self.combine(bits)
