"""
Puertos de Repositorio (Interfaces/Contratos).
Define CÓMO el dominio quiere guardar registros externos, sin saber DÓNDE.
"""
from abc import ABC, abstractmethod
from typing import Optional

from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class CurveRecordRepository(ABC):
    """
    Puerto de la caché de registros externos.
    Las claves son la etiqueta y el par (A, B) del modelo corto.
    """

    @abstractmethod
    async def get_by_label(self, label: str) -> Optional[ExternalCurveRecord]:
        """Retorna None si no está en caché."""
        pass

    @abstractmethod
    async def get_by_coefficients(self, A: int, B: int) -> Optional[ExternalCurveRecord]:
        """Retorna None si no está en caché."""
        pass

    @abstractmethod
    async def save(self, record: ExternalCurveRecord, coefficients: Optional[tuple] = None) -> ExternalCurveRecord:
        """
        Guarda el registro bajo su etiqueta y, si se dan, bajo (A, B).
        Un registro ya guardado no se sobrescribe.
        """
        pass
