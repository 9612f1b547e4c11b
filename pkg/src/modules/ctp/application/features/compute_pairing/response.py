"""
Response (DTO) del cálculo del emparejamiento.
"""
from typing import List

from pydantic import BaseModel


class LocalFactorEntry(BaseModel):
    place: str
    element_pair: List[List[int]]
    factor: int


class ComputePairingResponse(BaseModel):
    """
    DTO de salida: grupo de Selmer, matriz, núcleo, cotas y trazas locales.
    """
    selmer_dim: int
    selmer_basis: List[List[int]]
    torsion_image: List[List[int]]
    matrix_bits: List[List[int]]
    matrix_signs: List[List[int]]
    kernel_basis: List[List[int]]
    naive_bound: int
    refined_bound: int
    points: List[str]
    original_points: List[str] = []
    local_log: List[LocalFactorEntry]
    delta_checks: int = 0
    verification_runs: List[str] = []
