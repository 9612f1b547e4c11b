"""
Response (DTO) del pipeline: Report.
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.modules.cli.application.features.run_pipeline.command import RunConfig
from src.modules.ctp.application.features.compute_pairing.response import LocalFactorEntry
from src.modules.lmfdb.application.features.compare_report.response import CompareReportResponse


class CurveData(BaseModel):
    e1: int
    e2: int
    e3: int
    A: int
    B: int
    disc: int
    input: str
    u: str
    r: str


class SelmerData(BaseModel):
    dim: int
    basis: List[List[int]]
    torsion_image: List[List[int]]


class PairingData(BaseModel):
    matrix_bits: List[List[int]]
    matrix_signs: List[List[int]]
    kernel_basis: List[List[int]]
    rank: int


class Bounds(BaseModel):
    naive: int
    refined: int


class VerificationData(BaseModel):
    delta_checks: int
    runs: List[str]


class Report(BaseModel):
    """
    Informe de una ejecución.

    Los tiempos no forman parte del contrato de determinismo. points está en
    el modelo de entrada; normalized_points en el de raíces enteras.
    """
    version: str
    curve: CurveData
    selmer: SelmerData
    pairing: PairingData
    bounds: Bounds
    points: List[str]
    normalized_points: List[str] = []
    local_log: List[LocalFactorEntry]
    verification: VerificationData
    external: Optional[CompareReportResponse] = None
    config: RunConfig
    timings: Dict[str, float] = Field(default_factory=dict)

    def deterministic_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(exclude={"timings"}, indent=indent)
