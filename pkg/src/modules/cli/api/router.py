"""
Router de FastAPI para el pipeline del emparejamiento.
"""
from typing import Annotated

from fastapi import APIRouter, Depends, status

from src.core.config import settings
from src.modules.cli.api.dependencies import get_cli_facade
from src.modules.cli.application.facade import CliFacade
from src.modules.cli.application.features.run_pipeline.command import RunConfig
from src.modules.cli.application.features.run_pipeline.response import Report

router = APIRouter()


@router.post(
    "/compute",
    response_model=Report,
    status_code=status.HTTP_200_OK,
    summary="Calcular el emparejamiento de Cassels-Tate",
    description="2-descenso completo, matriz del emparejamiento sobre la base de Selmer y cotas de rango"
)
async def compute(
    config: RunConfig,
    facade: Annotated[CliFacade, Depends(get_cli_facade)]
) -> Report:
    """
    Las excepciones de dominio las traducen los exception handlers globales.
    """
    return await facade.run(config)


@router.get(
    "/health",
    summary="Health check del módulo"
)
async def health_check():
    return {"status": "healthy", "module": "ctp", "version": settings.app_version}
