"""
Tests unitarios para el emparejamiento de Cassels-Tate: factores locales,
ruta δ, matriz y cotas de rango.
"""
import pytest

from src.core.exceptions import IndistinguishableFromZeroError, PrecisionExhaustedError, ValidationError
import src.modules.ctp.domain.pairing as pairing_module
from src.modules.ctp.domain import (
    CasselsTatePairing,
    PairingMatrix,
    PairingOptions,
    PairingValue,
    cassels_product,
    choice_independence,
    contributing_places,
    delta_crosscheck,
    delta_product,
    global_data,
    local_factor,
    normalization_product,
    pair,
    pairing_matrix,
)
from src.modules.curve.domain import CurvePoint, SquareClassTriple, descent_image, from_coefficients, from_roots
from src.modules.numth.domain import Place
from src.modules.selmer.domain import TwoCovering, compute_selmer, local_point

T = SquareClassTriple.from_ints


@pytest.fixture(scope="module")
def congruent_one():
    return from_roots(-1, 0, 1)


@pytest.fixture(scope="module")
def congruent_six():
    return from_coefficients(-36, 0)


@pytest.fixture(scope="module")
def seventeen():
    return from_roots(-17, 0, 17)


class TestPairingValue:
    """Tests para el Value Object PairingValue."""

    def test_from_sign(self):
        """Debe llevar +1 a 0 y −1 a 1/2."""
        assert PairingValue.from_sign(1).bit == 0
        assert str(PairingValue.from_sign(-1)) == "1/2"

    def test_addition(self):
        """Debe sumar en ½Z/Z."""
        half = PairingValue(1)
        assert (half + half).bit == 0
        assert (half + PairingValue(0)).sign == -1

    def test_invalid_sign(self):
        """Debe rechazar signos distintos de ±1."""
        with pytest.raises(ValidationError, match="±1"):
            PairingValue.from_sign(0)


class TestPairingMatrixValueObject:
    """Tests para el Value Object PairingMatrix."""

    def test_bounds(self):
        """Debe derivar rango y cotas del núcleo."""
        basis = (T(1, -1, -1), T(2, 1, 2), T(-1, 1, -1), T(17, 1, 17))
        matrix = PairingMatrix(
            basis=basis,
            entries=((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0)),
            kernel_basis=basis[:2]
        )
        assert (matrix.rank, matrix.naive_rank_bound, matrix.refined_rank_bound) == (2, 2, 0)
        assert matrix.is_symmetric() and matrix.has_zero_diagonal()
        assert matrix.signs[2][3] == -1

    def test_not_square(self):
        """Debe rechazar matrices que no son cuadradas."""
        with pytest.raises(ValidationError, match="no es cuadrada"):
            PairingMatrix(basis=(T(2, 1, 2),), entries=((0, 0),), kernel_basis=())


class TestGlobalData:
    """Tests para los puntos globales y las tangentes."""

    def test_trivial_beta(self, congruent_one):
        """Debe dar H₁ = Γ₂² − Γ₃² − T² con punto (1 : 0 : 1) y L₁ = Γ₂ − T (escala 2)."""
        cov = TwoCovering(congruent_one, SquareClassTriple.trivial())
        tangents = global_data(cov)
        assert cov.conic(1).coefficients == (1, -1, -1)
        assert tangents[0].base_point.coords == (1, 0, 1)
        assert tangents[0].coefficients == (1, 0, -1)
        assert tangents[0].scale == 2

    def test_places(self, congruent_six):
        """Debe incluir ∞, 2 y 3 para y² = x³ − 36x."""
        cov = TwoCovering(congruent_six, T(3, -3, -1))
        places = contributing_places(congruent_six, cov.beta, T(6, -1, -6), global_data(cov))
        assert {Place.infinite(), Place.finite(2), Place.finite(3)} <= set(places)
        assert places[0].is_infinite


class TestLocalFactors:
    """Tests para los factores locales."""

    def test_trivial_second_argument(self, congruent_six):
        """Debe dar +1 con a' trivial."""
        cov = TwoCovering(congruent_six, T(3, -3, -1))
        for v in (Place.infinite(), Place.finite(2), Place.finite(3)):
            assert local_factor(cov, SquareClassTriple.trivial(), v) == 1

    def test_different_local_points_same_factor(self, seventeen):
        """Debe dar el mismo factor con puntos locales distintos."""
        selmer = compute_selmer(seventeen)
        a, a_prime = selmer.basis[-1], selmer.basis[-2]
        first = CasselsTatePairing(seventeen, PairingOptions(seed=0))
        second = CasselsTatePairing(seventeen, PairingOptions(seed=0, resample=2))
        assert first.pair(a, a_prime) == second.pair(a, a_prime)


class TestDeltaRoute:
    """Tests para la ruta de verificación con δ_{v,i}."""

    @pytest.mark.parametrize("v", [Place.infinite(), Place.finite(2), Place.finite(3), Place.finite(5)])
    def test_identity_and_place_product(self, congruent_six, v):
        """Debe cumplir s_kj·δ = −c·L y el producto local corregido."""
        cov = TwoCovering(congruent_six, T(3, -3, -1))
        tangents = global_data(cov)
        point = local_point(cov, v, avoid=tangents)
        witnesses = delta_crosscheck(cov, point)
        assert [w.index for w in witnesses] == [1, 2, 3]
        a_prime = T(-1, 6, -6)
        assert delta_product(witnesses, a_prime) == (
            cassels_product(point, tangents, a_prime) * normalization_product(witnesses, a_prime)
        )

    def test_real_identity_on_example(self, congruent_one):
        """Debe verificar la identidad con encierros reales en x³ − x."""
        cov = TwoCovering(congruent_one, T(1, -1, -1))
        point = local_point(cov, Place.infinite(), avoid=global_data(cov))
        assert len(delta_crosscheck(cov, point)) == 3


class TestPairing:
    """Tests para el emparejamiento y su matriz."""

    def test_trivial_left_argument(self, congruent_six):
        """Debe dar ⟨1, a'⟩ = 0."""
        assert pair(SquareClassTriple.trivial(), T(3, -3, -1), congruent_six).bit == 0

    def test_x3_minus_x_zero_matrix(self, congruent_one):
        """Debe dar la matriz nula 2×2 y cota refinada 0."""
        selmer = compute_selmer(congruent_one)
        matrix = pairing_matrix(selmer, options=PairingOptions(verify=True))
        assert matrix.entries == ((0, 0), (0, 0))
        assert matrix.refined_rank_bound == 0

    def test_x3_minus_36x_kernel_contains_point(self, congruent_six):
        """Debe contener la imagen de (−3, 9) en el núcleo."""
        selmer = compute_selmer(congruent_six)
        P = CurvePoint(-3, 9)
        matrix = pairing_matrix(selmer, points=[P])
        image = descent_image(P, congruent_six)
        coordinates = selmer.coordinates(image)
        for row in matrix.entries:
            assert sum(bit * c for bit, c in zip(row, coordinates)) % 2 == 0
        assert matrix.refined_rank_bound == 1

    def test_x3_minus_289x(self, seventeen):
        """Debe dar una matriz 4×4 de rango 2 y cota refinada 0."""
        selmer = compute_selmer(seventeen)
        engine = CasselsTatePairing(seventeen, PairingOptions(verify=True))
        matrix = engine.matrix(selmer)
        assert matrix.dim == 4
        assert matrix.rank == 2
        assert (matrix.naive_rank_bound, matrix.refined_rank_bound) == (2, 0)
        assert engine.delta_checks > 0
        assert len(engine.local_log(selmer)) > 0

    def test_alternating_and_bilinear(self, seventeen):
        """Debe ser alternado y bilineal sobre todo el grupo."""
        selmer = compute_selmer(seventeen)
        engine = CasselsTatePairing(seventeen)
        elements = list(selmer.elements())
        for a in elements:
            assert engine.pair(a, a).bit == 0
        b1, b2, b3 = selmer.basis[1], selmer.basis[2], selmer.basis[3]
        assert engine.pair(b2 * b3, b1).bit == engine.pair(b2, b1).bit ^ engine.pair(b3, b1).bit
        assert engine.pair(b1, b2 * b3).bit == engine.pair(b1, b2).bit ^ engine.pair(b1, b3).bit

    def test_threaded_matrix_matches(self, seventeen):
        """Debe dar la misma matriz con varios hilos."""
        selmer = compute_selmer(seventeen)
        serial = pairing_matrix(selmer)
        threaded = pairing_matrix(selmer, options=PairingOptions(workers=3))
        assert serial.entries == threaded.entries

    def test_choice_independence(self, congruent_one):
        """Debe repetir la matriz con otras cónicas, otros puntos locales y más lugares."""
        selmer = compute_selmer(congruent_one)
        options = PairingOptions(seed=7)
        reference = pairing_matrix(selmer, options=options)
        runs = choice_independence(selmer, reference, options)
        assert runs == ["conics", "resample-1", "resample-2", "resample-3", "places"]


class TestLocalCancellation:
    """Tests para la elección de otro punto local cuando la evaluación se cancela."""

    def test_cancellation_picks_another_point(self, congruent_six, monkeypatch):
        """Debe reintentar con otro punto y más precisión si la ruta δ se cancela."""
        calls = []

        def cancelling(cov, point):
            calls.append(point)
            if len(calls) == 1:
                raise IndistinguishableFromZeroError("Suma sin dígitos significativos")
            return original(cov, point)

        original = pairing_module.delta_crosscheck
        monkeypatch.setattr(pairing_module, "delta_crosscheck", cancelling)
        engine = CasselsTatePairing(congruent_six, PairingOptions(verify=True))
        a, a_prime = T(3, -3, -1), T(-1, 6, -6)
        v = Place.finite(3)
        factor, via_delta = engine._local(a, a_prime, v)
        assert len(calls) == 2
        assert calls[1] is not calls[0]
        assert engine.local_point(a, v) is calls[1]
        assert factor in (1, -1) and via_delta in (1, -1)
        assert engine.delta_checks == 1

    def test_persistent_cancellation_fails(self, congruent_six, monkeypatch):
        """Debe lanzar PRECISION_EXHAUSTED tras agotar los reintentos."""
        def cancelling(cov, point):
            raise IndistinguishableFromZeroError("Suma sin dígitos significativos")

        monkeypatch.setattr(pairing_module, "delta_crosscheck", cancelling)
        engine = CasselsTatePairing(congruent_six, PairingOptions(verify=True))
        with pytest.raises(PrecisionExhaustedError) as exc_info:
            engine._local(T(3, -3, -1), T(-1, 6, -6), Place.finite(3))
        assert exc_info.value.context["place"] == "3"

    @pytest.mark.parametrize("seed", [0, 2, 3, 5])
    def test_verified_matrix_across_seeds(self, congruent_six, seed):
        """Debe verificar la matriz de x³ − 36x con cualquier semilla."""
        selmer = compute_selmer(congruent_six)
        engine = CasselsTatePairing(congruent_six, PairingOptions(seed=seed, verify=True))
        matrix = engine.matrix(selmer, points=[CurvePoint(-3, 9)])
        assert matrix.refined_rank_bound == 1
        assert engine.delta_checks > 0
