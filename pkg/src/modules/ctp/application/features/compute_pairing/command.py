"""
Command (DTO) para calcular el emparejamiento de una curva normalizada.
Los Commands son objetos de transferencia de datos sin lógica de negocio.
"""
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationInfo, field_validator


class ComputePairingCommand(BaseModel):
    """
    DTO de entrada: raíces enteras de suma 0 y las elecciones del cálculo.
    """
    roots: List[int] = Field(..., min_length=3, max_length=3, description="Raíces e₁, e₂, e₃ del modelo normalizado")
    height_bound: int = Field(default=1000, ge=1, description="Cota de altura de la búsqueda de puntos")
    precision_cap: Optional[int] = Field(default=None, ge=20, description="Tope de precisión p-ádica")
    seed: int = Field(default=0, description="Semilla de las elecciones aleatorias")
    verify: bool = Field(default=False, description="Ruta δ y recálculos con otras elecciones")
    extra_places: List[int] = Field(default_factory=list, description="Primos añadidos a los lugares")
    workers: int = Field(default=1, ge=1, description="Hilos del cálculo")
    u: str = Field(default="1", description="Escala u del cambio al modelo de entrada")
    r: str = Field(default="0", description="Traslación r del cambio al modelo de entrada")

    @field_validator("roots")
    @classmethod
    def validate_roots(cls, v: List[int]) -> List[int]:
        if sum(v) != 0:
            raise ValueError("Las raíces normalizadas deben sumar 0")
        return v

    @field_validator("u", "r")
    @classmethod
    def validate_change(cls, v: str, info: ValidationInfo) -> str:
        try:
            value = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"'{v}' no es un racional")
        if info.field_name == "u" and value == 0:
            raise ValueError("La escala u no puede ser 0")
        return str(value)

    class Config:
        json_schema_extra = {
            "example": {
                "roots": [-6, 0, 6],
                "height_bound": 1000,
                "seed": 0,
                "verify": True,
                "extra_places": [],
                "workers": 1
            }
        }
