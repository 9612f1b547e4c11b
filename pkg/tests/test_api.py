"""
Tests de la API HTTP con TestClient y la facade sustituida por dependencia.
"""
import pytest
from fastapi.testclient import TestClient

from src.core.config import settings
from src.main import create_app
from src.modules.cli.api.dependencies import get_cli_facade
from tests.test_run_pipeline import FakeCatalogGateway, make_facade

COMPUTE = f"{settings.api_v1_prefix}/ctp/compute"


@pytest.fixture
def client():
    app = create_app()
    app.dependency_overrides[get_cli_facade] = lambda: make_facade(FakeCatalogGateway())
    with TestClient(app) as test_client:
        yield test_client


class TestHealth:
    """Tests de los endpoints de salud."""

    def test_root_health(self, client):
        """Debe responder healthy en /health."""
        assert client.get("/health").json() == {"status": "healthy"}

    def test_module_health(self, client):
        """Debe informar del módulo y la versión."""
        body = client.get(f"{settings.api_v1_prefix}/ctp/health").json()
        assert body["module"] == "ctp"
        assert body["version"] == settings.app_version


class TestCompute:
    """Tests del endpoint de cálculo."""

    def test_compute_roots(self, client):
        """Debe devolver el informe de y² = x³ − x."""
        response = client.post(COMPUTE, json={"roots": ["-1", "0", "1"], "height_bound": 20})
        assert response.status_code == 200
        body = response.json()
        assert body["selmer"]["dim"] == 2
        assert body["bounds"] == {"naive": 0, "refined": 0}
        assert body["config"]["roots"] == ["-1", "0", "1"]

    def test_invalid_body(self, client):
        """Debe responder 422 si el cuerpo no es un RunConfig válido."""
        response = client.post(COMPUTE, json={"roots": ["1", "2"]})
        assert response.status_code == 422
        assert response.json()["error"]["code"] == "INVALID_REQUEST_DATA"

    def test_non_rational_torsion(self, client):
        """Debe traducir la regla de 2-torsión racional a 422."""
        response = client.post(COMPUTE, json={"coeffs": ["0", "1"]})
        assert response.status_code == 422
        error = response.json()["error"]
        assert error["code"] == "TWO_TORSION_NOT_RATIONAL"
        assert error["context"]["violated_rule"] == "rational_two_torsion"

    def test_label_not_found(self, client):
        """Debe responder 404 para una etiqueta desconocida."""
        response = client.post(COMPUTE, json={"label": "99.z9", "offline": True})
        assert response.status_code == 404
        assert response.json()["success"] is False

    def test_root_lists_compute(self, client):
        """Debe anunciar la ruta de cálculo en la raíz."""
        assert client.get("/").json()["compute"] == COMPUTE
