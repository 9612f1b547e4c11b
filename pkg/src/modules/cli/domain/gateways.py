"""
Puertos de Gateway hacia los módulos de cálculo y de la base externa.
El módulo cli solo orquesta: no conoce los detalles de ninguno de los dos.
"""
from abc import ABC, abstractmethod
from typing import Optional, Sequence, Tuple

from src.modules.ctp.application.features.compute_pairing.response import ComputePairingResponse
from src.modules.curve.domain import SplitCurve
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse


class PairingGateway(ABC):
    """
    Puerto del Gateway del emparejamiento.
    """

    @abstractmethod
    async def compute(
        self,
        curve: SplitCurve,
        *,
        height_bound: int,
        precision_cap: Optional[int],
        seed: int,
        verify: bool,
        extra_places: Sequence[int],
        workers: int
    ) -> ComputePairingResponse:
        """
        Raises:
            DomainError: Cualquier error del cálculo, con su contexto
        """
        pass


class CurveCatalogGateway(ABC):
    """
    Puerto del Gateway de la base externa. Sus fallos son siempre blandos.
    """

    @abstractmethod
    async def ainvs_for_label(self, label: str, *, offline: bool) -> Optional[Tuple[int, ...]]:
        """a-invariantes de la curva con esa etiqueta, o None."""
        pass

    @abstractmethod
    async def cross_check(
        self,
        curve: SplitCurve,
        *,
        label: Optional[str],
        offline: bool,
        refined_bound: int,
        naive_bound: int,
        pairing_rank: int
    ) -> Optional[CompareReportResponse]:
        """Veredicto frente al registro externo, o None si no hay registro."""
        pass
