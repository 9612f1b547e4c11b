"""
Puerto de Gateway hacia la base de datos pública de curvas.
"""
from abc import ABC, abstractmethod
from typing import Optional

from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class CurveDatabaseGateway(ABC):
    """
    Puerto del Gateway de la base de datos externa.

    Responsabilidad: obtener registros por etiqueta o por modelo corto.
    """

    @abstractmethod
    async def fetch_by_label(self, label: str) -> Optional[ExternalCurveRecord]:
        """
        Returns:
            El registro, o None si la base no lo contiene

        Raises:
            InfrastructureError: Error de red o respuesta mal formada
        """
        pass

    @abstractmethod
    async def fetch_by_coefficients(self, A: int, B: int) -> Optional[ExternalCurveRecord]:
        """
        Busca la curva y² = x³ + Ax + B por sus a-invariantes [0, 0, 0, A, B].

        Raises:
            InfrastructureError: Error de red o respuesta mal formada
        """
        pass
