"""
Caso de Uso: Contrastar Informe.
"""
from src.modules.lmfdb.application.features.compare_report.command import CompareReportCommand
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse
from src.modules.lmfdb.application.interfaces import ICompareReportUseCase
from src.modules.lmfdb.domain.services import compare
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class CompareReportUseCase(ICompareReportUseCase):
    """
    Caso de Uso: contrastar las cotas del informe con el rango publicado.
    El resultado es consultivo: nunca lanza por un desajuste.
    """

    async def execute(self, command: CompareReportCommand, record: ExternalCurveRecord) -> CompareReportResponse:
        verdict = compare(command.refined_bound, command.pairing_rank, record)
        return CompareReportResponse(
            label=record.label,
            rank=record.rank,
            sha_order=record.sha_order,
            torsion_structure=record.torsion_structure,
            source_url=record.source_url,
            status=verdict.status.value,
            gap=verdict.gap,
            flags=list(verdict.flags),
            warnings=list(verdict.warnings)
        )
