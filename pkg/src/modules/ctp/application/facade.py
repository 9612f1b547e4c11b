"""
Facade del módulo del emparejamiento.
Punto único de entrada para el resto de módulos.
"""
from src.modules.ctp.application.features.compute_pairing.command import ComputePairingCommand
from src.modules.ctp.application.features.compute_pairing.response import ComputePairingResponse
from src.modules.ctp.application.interfaces import IComputePairingUseCase


class CtpFacade:
    """
    Facade para el módulo del emparejamiento de Cassels-Tate.
    """

    def __init__(self, compute_pairing_use_case: IComputePairingUseCase):
        self._compute_pairing = compute_pairing_use_case

    async def compute_pairing(self, command: ComputePairingCommand) -> ComputePairingResponse:
        return await self._compute_pairing.execute(command)
