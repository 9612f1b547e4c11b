"""
Caso de Uso: Calcular el emparejamiento.
Orquesta descenso, búsqueda de puntos, matriz y verificaciones.
"""
import asyncio
import logging
from fractions import Fraction

from src.modules.ctp.application.features.compute_pairing.command import ComputePairingCommand
from src.modules.ctp.application.features.compute_pairing.response import (
    ComputePairingResponse,
    LocalFactorEntry,
)
from src.modules.ctp.application.interfaces import IComputePairingUseCase
from src.modules.ctp.domain import CasselsTatePairing, PairingOptions, choice_independence
from src.modules.curve.domain import SplitCurve, point_search
from src.modules.numth.domain import Place, PrecisionPolicy
from src.modules.selmer.domain import compute_selmer

logger = logging.getLogger(__name__)


class ComputePairingUseCase(IComputePairingUseCase):
    """
    Caso de Uso: emparejamiento de Cassels-Tate sobre el 2-Selmer.

    Responsabilidades:
    1. Buscar puntos racionales hasta la cota de altura
    2. Calcular el grupo de Selmer
    3. Calcular la matriz y comprobar sus invariantes
    4. En modo verificación, repetir con otras elecciones
    """

    async def execute(self, command: ComputePairingCommand) -> ComputePairingResponse:
        # El cálculo es intensivo en CPU: fuera del bucle de eventos
        return await asyncio.to_thread(self.compute, command)

    def compute(self, command: ComputePairingCommand) -> ComputePairingResponse:
        curve = SplitCurve(*command.roots, u=Fraction(command.u), r=Fraction(command.r))
        extra = tuple(sorted({Place.finite(p).prime for p in command.extra_places}))
        options = PairingOptions(
            policy=PrecisionPolicy.from_settings(cap=command.precision_cap),
            seed=command.seed,
            extra_places=extra,
            verify=command.verify,
            workers=command.workers
        )

        points = point_search(curve, command.height_bound)
        selmer = compute_selmer(curve, workers=command.workers)
        engine = CasselsTatePairing(curve, options)
        matrix = engine.matrix(selmer, points)

        runs = []
        if command.verify:
            runs = choice_independence(selmer, matrix, options, points)

        logger.info(
            "Emparejamiento calculado",
            extra={
                "curve": str(curve),
                "selmer_dim": selmer.dim,
                "rank": matrix.rank,
                "refined_bound": matrix.refined_rank_bound,
            }
        )
        return ComputePairingResponse(
            selmer_dim=selmer.dim,
            selmer_basis=[list(b.reps) for b in selmer.basis],
            torsion_image=[list(t.reps) for t in selmer.torsion_image],
            matrix_bits=[list(row) for row in matrix.entries],
            matrix_signs=[list(row) for row in matrix.signs],
            kernel_basis=[list(k.reps) for k in matrix.kernel_basis],
            naive_bound=matrix.naive_rank_bound,
            refined_bound=matrix.refined_rank_bound,
            points=[str(P) for P in points],
            original_points=[str(curve.to_original(P)) for P in points],
            local_log=[
                LocalFactorEntry(
                    place=str(record.place),
                    element_pair=[list(record.left.reps), list(record.right.reps)],
                    factor=record.factor
                )
                for record in engine.local_log(selmer)
            ],
            delta_checks=engine.delta_checks,
            verification_runs=runs
        )
