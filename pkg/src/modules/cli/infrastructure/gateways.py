"""
Adaptadores de Gateway: conectan el módulo cli con las facades de ctp y lmfdb.
"""
from typing import Optional, Sequence, Tuple

from src.modules.cli.domain.gateways import CurveCatalogGateway, PairingGateway
from src.modules.ctp.application.facade import CtpFacade
from src.modules.ctp.application.features.compute_pairing.command import ComputePairingCommand
from src.modules.ctp.application.features.compute_pairing.response import ComputePairingResponse
from src.modules.curve.domain import SplitCurve, minimal_short_model
from src.modules.lmfdb.application.facade import LmfdbFacade
from src.modules.lmfdb.application.features.compare_report.command import CompareReportCommand
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse
from src.modules.lmfdb.application.features.lookup_curve.command import LookupCurveCommand


class CtpPairingGateway(PairingGateway):
    """
    Adaptador que traduce la curva normalizada a un ComputePairingCommand
    y llama a la facade del módulo ctp.
    """

    def __init__(self, facade: CtpFacade):
        self.facade = facade

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
        command = ComputePairingCommand(
            roots=list(curve.roots),
            height_bound=height_bound,
            precision_cap=precision_cap,
            seed=seed,
            verify=verify,
            extra_places=list(extra_places),
            workers=workers,
            u=str(curve.u),
            r=str(curve.r)
        )
        return await self.facade.compute_pairing(command)


class LmfdbCatalogGateway(CurveCatalogGateway):
    """
    Adaptador sobre la facade de lmfdb. La búsqueda por coeficientes usa
    el modelo corto minimal: sin d⁴ | A, d⁶ | B.
    """

    def __init__(self, facade: LmfdbFacade):
        self.facade = facade

    async def ainvs_for_label(self, label: str, *, offline: bool) -> Optional[Tuple[int, ...]]:
        record = await self.facade.lookup(LookupCurveCommand(label=label, offline=offline))
        return None if record is None else record.ainvs

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
        if label is not None:
            lookup = LookupCurveCommand(label=label, offline=offline)
        else:
            A, B = minimal_short_model(curve.A, curve.B)
            lookup = LookupCurveCommand(coefficients=[A, B], offline=offline)
        record = await self.facade.lookup(lookup)
        if record is None:
            return None
        command = CompareReportCommand(
            refined_bound=refined_bound,
            naive_bound=naive_bound,
            pairing_rank=pairing_rank
        )
        return await self.facade.compare(command, record)
