"""
Command (DTO) para buscar una curva en la base de datos externa.
"""
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator


class LookupCurveCommand(BaseModel):
    """
    DTO de entrada: una etiqueta o los coeficientes (A, B) del modelo corto.
    """
    label: Optional[str] = Field(default=None, min_length=1, description="Etiqueta de la curva")
    coefficients: Optional[List[int]] = Field(
        default=None, min_length=2, max_length=2, description="Coeficientes A, B de y² = x³ + Ax + B"
    )
    offline: bool = Field(default=False, description="No tocar la red; solo la caché")

    @model_validator(mode="after")
    def validate_single_key(self) -> "LookupCurveCommand":
        if (self.label is None) == (self.coefficients is None):
            raise ValueError("Se requiere exactamente una de label o coefficients")
        return self
