"""
Command (DTO) de una ejecución completa: RunConfig.
"""
from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from src.core.config import settings


def _parse_rationals(values: List[str], expected: int, field: str) -> List[str]:
    if len(values) != expected:
        raise ValueError(f"{field} requiere {expected} valores")
    for value in values:
        try:
            Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"'{value}' no es un racional")
    return [value.strip() for value in values]


class RunConfig(BaseModel):
    """
    DTO de entrada del pipeline.
    Exactamente una fuente de curva: raíces, coeficientes o etiqueta.
    """
    roots: Optional[List[str]] = Field(default=None, description="Raíces racionales r1, r2, r3")
    coeffs: Optional[List[str]] = Field(default=None, description="Coeficientes A, B de y² = x³ + Ax + B")
    label: Optional[str] = Field(default=None, description="Etiqueta en la base externa")
    height_bound: int = Field(default_factory=lambda: settings.height_bound, ge=1)
    precision: Optional[int] = Field(default=None, ge=20, description="Tope de precisión p-ádica")
    seed: int = Field(default_factory=lambda: settings.seed)
    verify: bool = False
    places: List[int] = Field(default_factory=list, description="Primos añadidos a los lugares")
    output: Literal["text", "json"] = "text"
    offline: bool = Field(default_factory=lambda: settings.lmfdb_offline)
    cross_check: bool = Field(default=False, description="Contrastar con la base externa")
    workers: int = Field(default_factory=lambda: settings.workers, ge=1)

    @field_validator("roots")
    @classmethod
    def validate_roots(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        return None if v is None else _parse_rationals(v, 3, "roots")

    @field_validator("coeffs")
    @classmethod
    def validate_coeffs(cls, v: Optional[List[str]]) -> Optional[List[str]]:
        return None if v is None else _parse_rationals(v, 2, "coeffs")

    @model_validator(mode="after")
    def validate_single_source(self) -> "RunConfig":
        sources = [s for s in (self.roots, self.coeffs, self.label) if s is not None]
        if len(sources) != 1:
            raise ValueError("Se requiere exactamente una fuente de curva: roots, coeffs o label")
        return self

    def describe_input(self) -> str:
        if self.roots is not None:
            return "roots " + ",".join(self.roots)
        if self.coeffs is not None:
            return "coeffs " + ",".join(self.coeffs)
        return f"label {self.label}"

    class Config:
        json_schema_extra = {
            "example": {
                "coeffs": ["-36", "0"],
                "height_bound": 1000,
                "seed": 0,
                "verify": False,
                "places": [],
                "output": "json"
            }
        }
