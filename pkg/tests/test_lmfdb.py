"""
Tests del módulo de la base externa: mapper, caché JSON, cliente HTTP
con httpx.MockTransport, caso de uso de búsqueda y veredictos.
"""
import json
from datetime import datetime, timezone

import httpx
import pytest
from pydantic import ValidationError as PydanticValidationError

from src.core.exceptions import InfrastructureError, ValidationError
from src.modules.lmfdb.application.facade import LmfdbFacade
from src.modules.lmfdb.application.features.compare_report.command import CompareReportCommand
from src.modules.lmfdb.application.features.compare_report.use_case import CompareReportUseCase
from src.modules.lmfdb.application.features.lookup_curve.command import LookupCurveCommand
from src.modules.lmfdb.application.features.lookup_curve.use_case import LookupCurveUseCase
from src.modules.lmfdb.domain import ExternalCurveRecord, VerdictStatus, compare
from src.modules.lmfdb.infrastructure.gateways import HttpCurveDatabaseGateway
from src.modules.lmfdb.infrastructure.mappers import CurveRecordMapper
from src.modules.lmfdb.infrastructure.repositories import JsonFileCurveRecordRepository

BASE_URL = "https://example.test/api/ec_curvedata/"

API_ENTRY = {
    "lmfdb_label": "32.a3",
    "rank": 0,
    "sha": 1,
    "torsion_structure": [2, 2],
    "ainvs": [0, 0, 0, -1, 0],
}


def make_record(label: str = "32.a3", rank: int = 0, sha_order=1) -> ExternalCurveRecord:
    return ExternalCurveRecord(
        label=label,
        rank=rank,
        sha_order=sha_order,
        torsion_structure="Z/2 x Z/2",
        source_url=BASE_URL,
        fetched_at=datetime(2024, 1, 1, tzinfo=timezone.utc),
        ainvs=(0, 0, 0, -1, 0),
    )


class CountingTransport(httpx.MockTransport):
    """MockTransport que guarda las peticiones recibidas."""

    def __init__(self, handler):
        self.requests = []

        def recording(request: httpx.Request) -> httpx.Response:
            self.requests.append(request)
            return handler(request)

        super().__init__(recording)


def json_transport(payload, status_code: int = 200) -> CountingTransport:
    return CountingTransport(lambda request: httpx.Response(status_code, json=payload))


def make_gateway(transport) -> HttpCurveDatabaseGateway:
    return HttpCurveDatabaseGateway(BASE_URL, timeout=1.0, min_interval=0.0, transport=transport)


class TestExternalCurveRecord:
    """Tests para el Value Object ExternalCurveRecord."""

    def test_sha_two_part(self):
        """Debe extraer la parte 2 del orden de Sha."""
        assert make_record(sha_order=12).sha_two_part == 4
        assert make_record(sha_order=None).sha_two_part is None

    def test_negative_rank(self):
        """Debe rechazar rangos negativos."""
        with pytest.raises(ValidationError, match="negativo"):
            make_record(rank=-1)

    def test_empty_label(self):
        """Debe exigir etiqueta."""
        with pytest.raises(ValidationError, match="obligatoria"):
            make_record(label="")


class TestCurveRecordMapper:
    """Tests para el mapper de registros."""

    def test_from_api(self):
        """Debe interpretar un registro de la API."""
        record = CurveRecordMapper.from_api(API_ENTRY, BASE_URL)
        assert record.label == "32.a3"
        assert record.torsion_structure == "Z/2 x Z/2"
        assert record.ainvs == (0, 0, 0, -1, 0)

    def test_trivial_torsion(self):
        """Debe nombrar 'trivial' la torsión vacía."""
        entry = {**API_ENTRY, "torsion_structure": []}
        assert CurveRecordMapper.from_api(entry, BASE_URL).torsion_structure == "trivial"

    def test_cache_format(self):
        """Debe reconstruir el registro desde el formato de la caché."""
        record = make_record(sha_order=4)
        assert CurveRecordMapper.from_dict(CurveRecordMapper.to_dict(record)) == record


class TestJsonFileCurveRecordRepository:
    """Tests para la caché de ficheros JSON."""

    async def test_save_and_get(self, tmp_path):
        """Debe guardar bajo la etiqueta y bajo (A, B)."""
        repository = JsonFileCurveRecordRepository(tmp_path)
        await repository.save(make_record(), (-1, 0))
        assert (await repository.get_by_label("32.a3")).rank == 0
        assert (await repository.get_by_coefficients(-1, 0)).label == "32.a3"
        assert await repository.get_by_coefficients(-4, 0) is None

    async def test_never_overwrites(self, tmp_path):
        """Debe conservar el primer registro guardado."""
        repository = JsonFileCurveRecordRepository(tmp_path)
        await repository.save(make_record(rank=0))
        await repository.save(make_record(rank=3))
        assert (await repository.get_by_label("32.a3")).rank == 0

    async def test_corrupt_entry(self, tmp_path):
        """Debe lanzar InfrastructureError si la entrada no es JSON."""
        (tmp_path / "label-32.a3.json").write_text("{no es json", encoding="utf-8")
        repository = JsonFileCurveRecordRepository(tmp_path)
        with pytest.raises(InfrastructureError, match="ilegible"):
            await repository.get_by_label("32.a3")


class TestHttpCurveDatabaseGateway:
    """Tests para el cliente HTTP con transporte simulado."""

    async def test_fetch_by_label(self):
        """Debe consultar por etiqueta en formato JSON."""
        transport = json_transport({"data": [API_ENTRY]})
        record = await make_gateway(transport).fetch_by_label("32.a3")
        assert record.label == "32.a3"
        params = transport.requests[0].url.params
        assert params["lmfdb_label"] == "32.a3"
        assert params["_format"] == "json"

    async def test_fetch_by_coefficients(self):
        """Debe consultar los a-invariantes del modelo corto."""
        transport = json_transport({"data": [API_ENTRY]})
        await make_gateway(transport).fetch_by_coefficients(-1, 0)
        assert transport.requests[0].url.params["ainvs"] == "li0,0,0,-1,0"

    async def test_missing_curve(self):
        """Debe devolver None si la lista está vacía."""
        assert await make_gateway(json_transport({"data": []})).fetch_by_label("11.a1") is None

    async def test_server_error(self):
        """Debe convertir un 500 en InfrastructureError."""
        with pytest.raises(InfrastructureError, match="red"):
            await make_gateway(json_transport({}, status_code=500)).fetch_by_label("32.a3")

    async def test_malformed_payload(self):
        """Debe rechazar respuestas sin la lista 'data'."""
        with pytest.raises(InfrastructureError, match="'data'"):
            await make_gateway(json_transport({"items": []})).fetch_by_label("32.a3")

    async def test_malformed_entry(self):
        """Debe rechazar registros sin los campos esperados."""
        with pytest.raises(InfrastructureError, match="mal formado"):
            await make_gateway(json_transport({"data": [{"rank": 0}]})).fetch_by_label("32.a3")


class TestLookupCurveUseCase:
    """Tests para el caso de uso de búsqueda."""

    async def test_cache_hit_skips_network(self, tmp_path):
        """Debe responder desde la caché sin peticiones."""
        repository = JsonFileCurveRecordRepository(tmp_path)
        await repository.save(make_record())
        transport = json_transport({"data": [API_ENTRY]})
        use_case = LookupCurveUseCase(repository, make_gateway(transport))

        record = await use_case.execute(LookupCurveCommand(label="32.a3"))

        assert record.label == "32.a3"
        assert transport.requests == []

    async def test_offline_miss(self, tmp_path):
        """Debe devolver None sin tocar la red en modo sin conexión."""
        transport = json_transport({"data": [API_ENTRY]})
        use_case = LookupCurveUseCase(JsonFileCurveRecordRepository(tmp_path), make_gateway(transport))
        assert await use_case.execute(LookupCurveCommand(label="32.a3", offline=True)) is None
        assert transport.requests == []

    async def test_fetch_and_cache(self, tmp_path):
        """Debe guardar en caché lo obtenido de la red."""
        transport = json_transport({"data": [API_ENTRY]})
        repository = JsonFileCurveRecordRepository(tmp_path)
        use_case = LookupCurveUseCase(repository, make_gateway(transport))

        await use_case.execute(LookupCurveCommand(coefficients=[-1, 0]))

        assert (await repository.get_by_coefficients(-1, 0)).label == "32.a3"
        saved = json.loads((tmp_path / "label-32.a3.json").read_text(encoding="utf-8"))
        assert saved["rank"] == 0

    async def test_network_failure_is_soft(self, tmp_path):
        """Debe devolver None, sin lanzar, si la red falla."""
        def refuse(request):
            raise httpx.ConnectError("sin red", request=request)

        use_case = LookupCurveUseCase(
            JsonFileCurveRecordRepository(tmp_path),
            make_gateway(httpx.MockTransport(refuse))
        )
        assert await use_case.execute(LookupCurveCommand(label="32.a3")) is None

    def test_command_requires_single_key(self):
        """Debe exigir exactamente una clave de búsqueda."""
        with pytest.raises(PydanticValidationError, match="exactamente una"):
            LookupCurveCommand(label="32.a3", coefficients=[-1, 0])


class TestCompare:
    """Tests para el veredicto de consistencia."""

    def test_sharp(self):
        """Debe marcar la cota como exacta."""
        verdict = compare(0, 0, make_record(rank=0))
        assert verdict.status is VerdictStatus.SHARP
        assert verdict.flags == ("bound_sharp",)

    def test_gap(self):
        """Debe informar del hueco con un aviso."""
        verdict = compare(2, 0, make_record(rank=0))
        assert (verdict.status, verdict.gap) == (VerdictStatus.GAP, 2)
        assert verdict.is_consistent

    def test_inconsistent(self):
        """Debe señalar un rango publicado por encima de la cota."""
        verdict = compare(0, 2, make_record(rank=1))
        assert verdict.status is VerdictStatus.INCONSISTENT
        assert not verdict.is_consistent
        assert "rank_exceeds_bound" in verdict.flags

    def test_expected_nonzero_pairing(self):
        """Debe avisar si Sha tiene parte 2 no trivial y la matriz es nula."""
        verdict = compare(2, 0, make_record(rank=0, sha_order=4))
        assert "expected_nonzero_pairing" in verdict.flags


class TestLmfdbFacade:
    """Tests de la facade con sus casos de uso reales."""

    async def test_lookup_and_compare(self, tmp_path):
        """Debe buscar por coeficientes y contrastar el informe."""
        facade = LmfdbFacade(
            lookup_curve_use_case=LookupCurveUseCase(
                JsonFileCurveRecordRepository(tmp_path),
                make_gateway(json_transport({"data": [API_ENTRY]}))
            ),
            compare_report_use_case=CompareReportUseCase()
        )
        record = await facade.lookup(LookupCurveCommand(coefficients=[-1, 0]))
        response = await facade.compare(
            CompareReportCommand(refined_bound=0, naive_bound=0, pairing_rank=0),
            record
        )
        assert response.status == "sharp"
        assert response.torsion_structure == "Z/2 x Z/2"
