"""
Caso de Uso: Ejecutar el pipeline.
parse → Selmer → matriz → cotas → informe (→ contraste externo).
"""
import logging
import time
from fractions import Fraction
from typing import Tuple

from src.core.config import settings
from src.core.exceptions import ConsistencyError, NotFoundError
from src.modules.cli.application.features.run_pipeline.command import RunConfig
from src.modules.cli.application.features.run_pipeline.response import (
    Bounds,
    CurveData,
    PairingData,
    Report,
    SelmerData,
    VerificationData,
)
from src.modules.cli.application.interfaces import IRunPipelineUseCase
from src.modules.cli.domain.gateways import CurveCatalogGateway, PairingGateway
from src.modules.curve.domain import SplitCurve, from_ainvs, from_coefficients, from_roots

logger = logging.getLogger(__name__)


class RunPipelineUseCase(IRunPipelineUseCase):
    """
    Caso de Uso: pipeline completo sobre una curva.

    Responsabilidades:
    1. Construir la curva normalizada desde raíces, coeficientes o etiqueta
    2. Delegar el cálculo en el gateway del emparejamiento
    3. Comprobar las cotas y contrastar con la base externa si se pide
    """

    def __init__(self, pairing_gateway: PairingGateway, catalog_gateway: CurveCatalogGateway):
        self.pairing_gateway = pairing_gateway
        self.catalog_gateway = catalog_gateway

    async def execute(self, config: RunConfig) -> Report:
        timings = {}
        started = time.perf_counter()

        curve = await self._curve(config)
        timings["parse"] = time.perf_counter() - started
        logger.info("Curva normalizada", extra={"curve": str(curve), "source": config.describe_input()})

        mark = time.perf_counter()
        result = await self.pairing_gateway.compute(
            curve,
            height_bound=config.height_bound,
            precision_cap=config.precision,
            seed=config.seed,
            verify=config.verify,
            extra_places=config.places,
            workers=config.workers
        )
        timings["pairing"] = time.perf_counter() - mark

        if result.refined_bound > result.naive_bound:
            raise ConsistencyError(
                "La cota refinada supera la cota ingenua",
                context={"curve": str(curve), "refined": result.refined_bound, "naive": result.naive_bound}
            )
        pairing_rank = result.selmer_dim - len(result.kernel_basis)

        external = None
        if config.cross_check or config.label is not None:
            mark = time.perf_counter()
            external = await self.catalog_gateway.cross_check(
                curve,
                label=config.label,
                offline=config.offline,
                refined_bound=result.refined_bound,
                naive_bound=result.naive_bound,
                pairing_rank=pairing_rank
            )
            timings["external"] = time.perf_counter() - mark
        timings["total"] = time.perf_counter() - started

        return Report(
            version=settings.app_version,
            curve=CurveData(
                e1=curve.e1,
                e2=curve.e2,
                e3=curve.e3,
                A=curve.A,
                B=curve.B,
                disc=curve.disc,
                input=config.describe_input(),
                u=str(curve.u),
                r=str(curve.r)
            ),
            selmer=SelmerData(
                dim=result.selmer_dim,
                basis=result.selmer_basis,
                torsion_image=result.torsion_image
            ),
            pairing=PairingData(
                matrix_bits=result.matrix_bits,
                matrix_signs=result.matrix_signs,
                kernel_basis=result.kernel_basis,
                rank=pairing_rank
            ),
            bounds=Bounds(naive=result.naive_bound, refined=result.refined_bound),
            points=result.original_points,
            normalized_points=result.points,
            local_log=result.local_log,
            verification=VerificationData(delta_checks=result.delta_checks, runs=result.verification_runs),
            external=external,
            config=config,
            timings=timings
        )

    async def _curve(self, config: RunConfig) -> SplitCurve:
        if config.roots is not None:
            return from_roots(*(Fraction(r) for r in config.roots))
        if config.coeffs is not None:
            A, B = (Fraction(c) for c in config.coeffs)
            return from_coefficients(A, B)
        ainvs = await self._ainvs(config.label, config.offline)
        return from_ainvs(ainvs)

    async def _ainvs(self, label: str, offline: bool) -> Tuple[int, ...]:
        ainvs = await self.catalog_gateway.ainvs_for_label(label, offline=offline)
        if ainvs is None:
            raise NotFoundError("Curva", label, context={"offline": offline})
        return ainvs
