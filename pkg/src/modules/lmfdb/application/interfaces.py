"""
Interfaces (Puertos) para los Casos de Uso del módulo de la base externa.
"""
from abc import ABC, abstractmethod
from typing import Optional

from src.modules.lmfdb.application.features.compare_report.command import CompareReportCommand
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse
from src.modules.lmfdb.application.features.lookup_curve.command import LookupCurveCommand
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class ILookupCurveUseCase(ABC):
    """
    Interfaz para el caso de uso de buscar una curva.
    """

    @abstractmethod
    async def execute(self, command: LookupCurveCommand) -> Optional[ExternalCurveRecord]:
        """
        Returns:
            El registro, o None si no existe o la consulta falla (con aviso)
        """
        pass


class ICompareReportUseCase(ABC):
    """
    Interfaz para el caso de uso de contrastar un informe.
    """

    @abstractmethod
    async def execute(self, command: CompareReportCommand, record: ExternalCurveRecord) -> CompareReportResponse:
        pass
