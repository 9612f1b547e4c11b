"""
Adaptador de Repositorio: caché de registros como ficheros JSON.
"""
import json
import logging
import re
from pathlib import Path
from typing import Optional

from src.core.exceptions import InfrastructureError, ValidationError
from src.modules.lmfdb.domain.repositories import CurveRecordRepository
from src.modules.lmfdb.domain.value_objects import ExternalCurveRecord
from src.modules.lmfdb.infrastructure.mappers import CurveRecordMapper

logger = logging.getLogger(__name__)


class JsonFileCurveRecordRepository(CurveRecordRepository):
    """
    Un fichero por clave bajo el directorio de caché:
    label-<etiqueta>.json y ab-<A>_<B>.json.
    """

    def __init__(self, cache_dir: Path):
        self.cache_dir = Path(cache_dir)

    def _label_path(self, label: str) -> Path:
        return self.cache_dir / f"label-{re.sub(r'[^A-Za-z0-9._-]', '_', label)}.json"

    def _coefficients_path(self, A: int, B: int) -> Path:
        return self.cache_dir / f"ab-{A}_{B}.json"

    def _read(self, path: Path) -> Optional[ExternalCurveRecord]:
        if not path.is_file():
            return None
        try:
            return CurveRecordMapper.from_dict(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, ValueError, KeyError, TypeError, ValidationError) as e:
            raise InfrastructureError(
                f"Entrada de caché ilegible: {path.name}",
                context={"path": str(path)},
                cause=e
            )

    def _write(self, path: Path, record: ExternalCurveRecord) -> None:
        if path.exists():
            return
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(CurveRecordMapper.to_dict(record), indent=2, sort_keys=True), encoding="utf-8")
        except OSError as e:
            raise InfrastructureError(
                f"No se pudo escribir la caché: {path.name}",
                context={"path": str(path)},
                cause=e
            )

    async def get_by_label(self, label: str) -> Optional[ExternalCurveRecord]:
        return self._read(self._label_path(label))

    async def get_by_coefficients(self, A: int, B: int) -> Optional[ExternalCurveRecord]:
        return self._read(self._coefficients_path(A, B))

    async def save(self, record: ExternalCurveRecord, coefficients: Optional[tuple] = None) -> ExternalCurveRecord:
        self._write(self._label_path(record.label), record)
        if coefficients is not None:
            A, B = coefficients
            self._write(self._coefficients_path(A, B), record)
        logger.debug("Registro guardado en caché", extra={"label": record.label})
        return record
