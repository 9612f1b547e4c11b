"""
Value Objects del dominio de la base de datos externa de curvas.
"""
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Optional, Tuple

from src.core.exceptions import ValidationError


class VerdictStatus(str, Enum):
    """
    Resultado de contrastar la cota refinada con el rango publicado.
    """
    SHARP = "sharp"                  # cota refinada igual al rango
    GAP = "gap"                      # cota por encima del rango
    INCONSISTENT = "inconsistent"    # rango por encima de la cota: señal de error

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ExternalCurveRecord:
    """
    Registro de una curva en la base de datos externa.
    Reglas:
    - rango no negativo
    - orden de Sha positivo si se conoce
    - cinco a-invariantes
    """
    label: str
    rank: int
    torsion_structure: str
    source_url: str
    fetched_at: datetime
    ainvs: Tuple[int, int, int, int, int]
    sha_order: Optional[int] = None

    def __post_init__(self):
        if not self.label:
            raise ValidationError("La etiqueta es obligatoria", field="label", value=self.label)
        if self.rank < 0:
            raise ValidationError("El rango no puede ser negativo", field="rank", value=self.rank)
        if self.sha_order is not None and self.sha_order < 1:
            raise ValidationError("El orden de Sha debe ser positivo", field="sha_order", value=self.sha_order)
        if len(self.ainvs) != 5:
            raise ValidationError("Se esperan cinco a-invariantes", field="ainvs", value=self.ainvs)

    @property
    def sha_two_part(self) -> Optional[int]:
        if self.sha_order is None:
            return None
        part = 1
        order = self.sha_order
        while order % 2 == 0:
            order //= 2
            part *= 2
        return part


@dataclass(frozen=True)
class ConsistencyVerdict:
    """Veredicto consultivo; nunca interrumpe el cálculo."""
    status: VerdictStatus
    gap: int
    flags: Tuple[str, ...] = field(default_factory=tuple)
    warnings: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_consistent(self) -> bool:
        return self.status is not VerdictStatus.INCONSISTENT
