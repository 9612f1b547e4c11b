"""
Facade del módulo cli: punto de entrada único para la línea de órdenes y la API.
"""
from typing import List, Union

from src.core.exceptions import DomainError
from src.modules.cli.application.features.run_pipeline.command import RunConfig
from src.modules.cli.application.features.run_pipeline.response import Report
from src.modules.cli.application.interfaces import IRunPipelineUseCase


class CliFacade:
    """
    Facade del pipeline.

    Responsabilidades:
    1. Ejecutar una configuración
    2. Ejecutar un lote, aislando los fallos de cada línea
    """

    def __init__(self, run_pipeline_use_case: IRunPipelineUseCase):
        self._run_pipeline = run_pipeline_use_case

    async def run(self, config: RunConfig) -> Report:
        return await self._run_pipeline.execute(config)

    async def run_batch(self, configs: List[RunConfig]) -> List[Union[Report, DomainError]]:
        results: List[Union[Report, DomainError]] = []
        for config in configs:
            try:
                results.append(await self._run_pipeline.execute(config))
            except DomainError as e:
                results.append(e)
        return results
