"""Módulo de dominio de la base de datos externa de curvas."""
from src.modules.lmfdb.domain.gateways import CurveDatabaseGateway
from src.modules.lmfdb.domain.repositories import CurveRecordRepository
from src.modules.lmfdb.domain.services import compare
from src.modules.lmfdb.domain.value_objects import ConsistencyVerdict, ExternalCurveRecord, VerdictStatus

__all__ = [
    "CurveDatabaseGateway",
    "CurveRecordRepository",
    "compare",
    "ConsistencyVerdict",
    "ExternalCurveRecord",
    "VerdictStatus",
]
