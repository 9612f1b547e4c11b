"""
Interfaces (Puertos) para los Casos de Uso del módulo cli.
"""
from abc import ABC, abstractmethod

from src.modules.cli.application.features.run_pipeline.command import RunConfig
from src.modules.cli.application.features.run_pipeline.response import Report


class IRunPipelineUseCase(ABC):
    """
    Interfaz para el caso de uso de ejecutar el pipeline completo.
    """

    @abstractmethod
    async def execute(self, config: RunConfig) -> Report:
        """
        Normaliza la curva, calcula Selmer y la matriz y arma el informe.

        Args:
            config: Curva de entrada y elecciones de la ejecución

        Returns:
            Informe completo

        Raises:
            ValidationError: Entrada mal formada
            BusinessRuleViolation: Curva singular o sin 2-torsión racional
            NotFoundError: Etiqueta desconocida
            ComputationError: Límite de esfuerzo agotado
            ConsistencyError: Fallo de una comprobación interna
        """
        pass
