"""
Facade del módulo de la base de datos externa.
El resto de módulos solo usa esta clase: el cálculo nunca depende de ella.
"""
from typing import Optional

from src.modules.lmfdb.application.features.compare_report.command import CompareReportCommand
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse
from src.modules.lmfdb.application.features.lookup_curve.command import LookupCurveCommand
from src.modules.lmfdb.application.interfaces import ICompareReportUseCase, ILookupCurveUseCase
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class LmfdbFacade:
    """
    Facade para el módulo de la base externa.

    Responsabilidades:
    1. Buscar registros por etiqueta o por coeficientes
    2. Contrastar un informe con un registro
    """

    def __init__(self, lookup_curve_use_case: ILookupCurveUseCase, compare_report_use_case: ICompareReportUseCase):
        self._lookup_curve = lookup_curve_use_case
        self._compare_report = compare_report_use_case

    async def lookup(self, command: LookupCurveCommand) -> Optional[ExternalCurveRecord]:
        return await self._lookup_curve.execute(command)

    async def compare(self, command: CompareReportCommand, record: ExternalCurveRecord) -> CompareReportResponse:
        return await self._compare_report.execute(command, record)
