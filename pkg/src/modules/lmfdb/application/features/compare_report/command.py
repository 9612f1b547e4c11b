"""
Command (DTO) con los datos del informe que se contrastan.
"""
from pydantic import BaseModel, Field


class CompareReportCommand(BaseModel):
    refined_bound: int = Field(..., ge=-2, description="dim del núcleo − 2")
    naive_bound: int = Field(..., ge=-2, description="dim de Selmer − 2")
    pairing_rank: int = Field(..., ge=0, description="Rango de la matriz sobre F₂")
