"""
Caso de Uso: Buscar Curva.
Consulta la caché y, si se permite, la API pública.
"""
import logging
from typing import Optional

from src.core.exceptions import InfrastructureError
from src.modules.lmfdb.application.features.lookup_curve.command import LookupCurveCommand
from src.modules.lmfdb.application.interfaces import ILookupCurveUseCase
from src.modules.lmfdb.domain.gateways import CurveDatabaseGateway
from src.modules.lmfdb.domain.repositories import CurveRecordRepository
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord

logger = logging.getLogger(__name__)


class LookupCurveUseCase(ILookupCurveUseCase):
    """
    Caso de Uso: obtener el registro externo de una curva.

    Responsabilidades:
    1. Consultar primero la caché
    2. En modo sin conexión, no usar nunca la red
    3. Convertir fallos de red o de formato en avisos (resultado None)
    """

    def __init__(self, repository: CurveRecordRepository, gateway: CurveDatabaseGateway):
        self.repository = repository
        self.gateway = gateway

    async def execute(self, command: LookupCurveCommand) -> Optional[ExternalCurveRecord]:
        key = command.label or tuple(command.coefficients)
        try:
            if command.label is not None:
                record = await self.repository.get_by_label(command.label)
            else:
                record = await self.repository.get_by_coefficients(*command.coefficients)
            if record is not None or command.offline:
                return record

            if command.label is not None:
                record = await self.gateway.fetch_by_label(command.label)
            else:
                record = await self.gateway.fetch_by_coefficients(*command.coefficients)
            if record is None:
                logger.info("Curva ausente en la base externa", extra={"key": str(key)})
                return None
            coefficients = tuple(command.coefficients) if command.coefficients else None
            return await self.repository.save(record, coefficients)
        except InfrastructureError as e:
            logger.warning(
                f"Consulta externa fallida: {e.message}",
                extra={"key": str(key), "code": e.code}
            )
            return None
