"""
Response (DTO) del contraste con la base externa.
"""
from typing import List, Optional

from pydantic import BaseModel


class CompareReportResponse(BaseModel):
    """
    DTO de salida: registro usado y veredicto.
    """
    label: str
    rank: int
    sha_order: Optional[int] = None
    torsion_structure: str
    source_url: str
    status: str
    gap: int
    flags: List[str]
    warnings: List[str]

    class Config:
        json_schema_extra = {
            "example": {
                "label": "32.a3",
                "rank": 0,
                "sha_order": 1,
                "torsion_structure": "Z/2 x Z/2",
                "source_url": "https://www.lmfdb.org/api/ec_curvedata/?lmfdb_label=32.a3",
                "status": "sharp",
                "gap": 0,
                "flags": ["bound_sharp"],
                "warnings": []
            }
        }
