"""
Adaptador del Gateway: cliente HTTP de la API pública de curvas.
"""
import asyncio
import logging
import time
from typing import Dict, Optional

import httpx

from src.core.exceptions import InfrastructureError, ValidationError
from src.modules.lmfdb.domain.gateways import CurveDatabaseGateway
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord
from src.modules.lmfdb.infrastructure.mappers import CurveRecordMapper

logger = logging.getLogger(__name__)


class HttpCurveDatabaseGateway(CurveDatabaseGateway):
    """
    Cliente de la API JSON con un único punto de salida y espaciado
    mínimo entre peticiones.
    """

    def __init__(
        self,
        base_url: str,
        *,
        timeout: float = 10.0,
        min_interval: float = 1.0,
        transport: Optional[httpx.AsyncBaseTransport] = None
    ):
        """
        Args:
            base_url: URL de la colección (p. ej. .../api/ec_curvedata/)
            timeout: Segundos por petición
            min_interval: Segundos mínimos entre peticiones
            transport: Transporte alternativo (tests con httpx.MockTransport)
        """
        self.base_url = base_url
        self.timeout = timeout
        self.min_interval = min_interval
        self._transport = transport
        self._lock = asyncio.Lock()
        self._last_request = 0.0

    async def _throttle(self) -> None:
        wait = self.min_interval - (time.monotonic() - self._last_request)
        if wait > 0:
            await asyncio.sleep(wait)
        self._last_request = time.monotonic()

    async def _query(self, params: Dict[str, str]) -> Optional[ExternalCurveRecord]:
        params = {**params, "_format": "json"}
        async with self._lock:
            await self._throttle()
            try:
                async with httpx.AsyncClient(timeout=self.timeout, transport=self._transport) as client:
                    response = await client.get(self.base_url, params=params)
                    response.raise_for_status()
                    payload = response.json()
            except httpx.HTTPError as e:
                raise InfrastructureError(
                    f"Error de red consultando {self.base_url}",
                    context={"params": params},
                    cause=e
                )
            except ValueError as e:
                raise InfrastructureError("Respuesta JSON mal formada", context={"params": params}, cause=e)

        data = payload.get("data") if isinstance(payload, dict) else None
        if not isinstance(data, list):
            raise InfrastructureError("La respuesta no contiene la lista 'data'", context={"params": params})
        if not data:
            return None
        try:
            return CurveRecordMapper.from_api(data[0], str(response.url))
        except (KeyError, TypeError, ValueError, ValidationError) as e:
            raise InfrastructureError("Registro de la API mal formado", context={"params": params}, cause=e)

    async def fetch_by_label(self, label: str) -> Optional[ExternalCurveRecord]:
        logger.debug("Consulta por etiqueta", extra={"label": label})
        return await self._query({"lmfdb_label": label})

    async def fetch_by_coefficients(self, A: int, B: int) -> Optional[ExternalCurveRecord]:
        logger.debug("Consulta por coeficientes", extra={"A": A, "B": B})
        return await self._query({"ainvs": f"li0,0,0,{A},{B}"})
