"""
Interfaces (Puertos) para los Casos de Uso del módulo del emparejamiento.
"""
from abc import ABC, abstractmethod

from src.modules.ctp.application.features.compute_pairing.command import ComputePairingCommand
from src.modules.ctp.application.features.compute_pairing.response import ComputePairingResponse


class IComputePairingUseCase(ABC):
    """
    Interfaz para el caso de uso de calcular el emparejamiento.
    """

    @abstractmethod
    async def execute(self, command: ComputePairingCommand) -> ComputePairingResponse:
        """
        Ejecuta el 2-descenso y el emparejamiento sobre la base de Selmer.

        Args:
            command: Curva normalizada y elecciones del cálculo

        Returns:
            Grupo de Selmer, matriz y cotas de rango

        Raises:
            ValidationError: Si la curva o los lugares no son válidos
            ComputationError: Si se agota algún límite de esfuerzo
            ConsistencyError: Si falla una comprobación interna
        """
        pass
