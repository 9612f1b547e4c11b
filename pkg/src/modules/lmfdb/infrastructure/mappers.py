"""
Mappers de Infraestructura para el módulo de la base de datos externa.
Convierten entre ExternalCurveRecord, el JSON de la caché y el JSON de la API.
"""
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord


class CurveRecordMapper:
    """
    Mapper estático del registro externo.

    Responsabilidades:
    - Serializar a y desde el formato de la caché (un JSON por registro)
    - Interpretar un registro de la API pública
    """

    @staticmethod
    def to_dict(record: ExternalCurveRecord) -> Dict[str, Any]:
        return {
            "label": record.label,
            "rank": record.rank,
            "sha_order": record.sha_order,
            "torsion_structure": record.torsion_structure,
            "source_url": record.source_url,
            "fetched_at": record.fetched_at.isoformat(),
            "ainvs": list(record.ainvs),
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> ExternalCurveRecord:
        return ExternalCurveRecord(
            label=str(data["label"]),
            rank=int(data["rank"]),
            sha_order=None if data.get("sha_order") is None else int(data["sha_order"]),
            torsion_structure=str(data["torsion_structure"]),
            source_url=str(data["source_url"]),
            fetched_at=datetime.fromisoformat(data["fetched_at"]),
            ainvs=tuple(int(a) for a in data["ainvs"]),
        )

    @staticmethod
    def from_api(entry: Dict[str, Any], source_url: str, fetched_at: Optional[datetime] = None) -> ExternalCurveRecord:
        """
        Interpreta un elemento de "data" de la API (campos lmfdb_label,
        rank, sha, torsion_structure, ainvs).
        """
        torsion = entry.get("torsion_structure") or []
        structure = " x ".join(f"Z/{int(n)}" for n in torsion) or "trivial"
        sha = entry.get("sha")
        return ExternalCurveRecord(
            label=str(entry["lmfdb_label"]),
            rank=int(entry["rank"]),
            sha_order=None if sha is None else int(sha),
            torsion_structure=structure,
            source_url=source_url,
            fetched_at=fetched_at or datetime.now(timezone.utc),
            ainvs=tuple(int(a) for a in entry["ainvs"]),
        )
