"""
Composition Root: construye el grafo de facades a partir de la configuración.
Los tests sustituyen piezas (transporte HTTP, caché) registrando otra factory.
"""
from pathlib import Path
from typing import Any, Callable, Dict, Optional

import httpx

from src.core.config import Settings, settings as default_settings
from src.modules.cli.application.facade import CliFacade
from src.modules.cli.application.features.run_pipeline.use_case import RunPipelineUseCase
from src.modules.cli.infrastructure.gateways import CtpPairingGateway, LmfdbCatalogGateway
from src.modules.ctp.application.facade import CtpFacade
from src.modules.ctp.application.features.compute_pairing.use_case import ComputePairingUseCase
from src.modules.lmfdb.application.facade import LmfdbFacade
from src.modules.lmfdb.application.features.compare_report.use_case import CompareReportUseCase
from src.modules.lmfdb.application.features.lookup_curve.use_case import LookupCurveUseCase
from src.modules.lmfdb.infrastructure.gateways import HttpCurveDatabaseGateway
from src.modules.lmfdb.infrastructure.repositories import JsonFileCurveRecordRepository


class DIContainer:
    """
    Registro de factories perezosas; cada servicio se crea una sola vez.
    """

    def __init__(self, config: Settings = default_settings):
        self.config = config
        self._factories: Dict[str, Callable[["DIContainer"], Any]] = {}
        self._instances: Dict[str, Any] = {}

    def register(self, key: str, factory: Callable[["DIContainer"], Any]) -> None:
        self._factories[key] = factory
        self._instances.pop(key, None)

    def resolve(self, key: str) -> Any:
        if key not in self._instances:
            if key not in self._factories:
                raise KeyError(f"Servicio '{key}' no registrado")
            self._instances[key] = self._factories[key](self)
        return self._instances[key]

    def reset(self) -> None:
        self._instances.clear()


def _ctp_facade(c: DIContainer) -> CtpFacade:
    return CtpFacade(compute_pairing_use_case=ComputePairingUseCase())


def _lmfdb_facade(c: DIContainer) -> LmfdbFacade:
    gateway = HttpCurveDatabaseGateway(
        c.config.lmfdb_base_url,
        timeout=c.config.lmfdb_timeout,
        min_interval=c.config.lmfdb_min_interval,
        transport=c.resolve("lmfdb_transport")
    )
    repository = JsonFileCurveRecordRepository(Path(c.config.lmfdb_cache_dir))
    return LmfdbFacade(
        lookup_curve_use_case=LookupCurveUseCase(repository, gateway),
        compare_report_use_case=CompareReportUseCase()
    )


def _cli_facade(c: DIContainer) -> CliFacade:
    return CliFacade(
        run_pipeline_use_case=RunPipelineUseCase(
            pairing_gateway=CtpPairingGateway(c.resolve("ctp_facade")),
            catalog_gateway=LmfdbCatalogGateway(c.resolve("lmfdb_facade"))
        )
    )


def build_container(
    config: Settings = default_settings,
    transport: Optional[httpx.AsyncBaseTransport] = None
) -> DIContainer:
    """
    Registra las facades de ctp, lmfdb y cli.

    Args:
        config: Configuración (por defecto el singleton)
        transport: Transporte httpx alternativo para la base externa
    """
    c = DIContainer(config)
    c.register("lmfdb_transport", lambda _: transport)
    c.register("ctp_facade", _ctp_facade)
    c.register("lmfdb_facade", _lmfdb_facade)
    c.register("cli_facade", _cli_facade)
    return c


# Singleton del contenedor
container = build_container()
