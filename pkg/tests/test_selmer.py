"""
Tests unitarios para el dominio de Selmer: espacio de candidatos,
resolubilidad local, puntos locales y grupo de 2-Selmer.
"""
import random
from fractions import Fraction

import pytest

from src.core.exceptions import ValidationError
from src.modules.conic.domain import tangent_form, legendre_solve
from src.modules.curve.domain import CurvePoint, SquareClassTriple, descent_image, from_coefficients, from_roots
from src.modules.numth.domain import Place, RealInterval
from src.modules.selmer.domain import (
    SelmerGroup,
    TwoCovering,
    admissible_interval,
    candidate_space,
    compute_selmer,
    is_locally_soluble,
    local_image,
    local_point,
    relevant_places,
    torsion_image,
    triple_vector,
)

T = SquareClassTriple.from_ints


@pytest.fixture(scope="module")
def congruent_one():
    return from_roots(-1, 0, 1)


@pytest.fixture(scope="module")
def congruent_six():
    return from_coefficients(-36, 0)


class TestCandidateSpace:
    """Tests para el espacio de candidatos."""

    def test_dimension_for_x3_minus_x(self, congruent_one):
        """Debe tener dimensión 4 con primos malos {2}."""
        assert congruent_one.bad_primes == (2,)
        assert len(candidate_space(congruent_one)) == 4

    def test_dimension_for_x3_minus_36x(self, congruent_six):
        """Debe tener dimensión 6 con primos malos {2, 3}."""
        assert congruent_six.bad_primes == (2, 3)
        assert len(candidate_space(congruent_six)) == 6

    def test_triple_vector(self):
        """Debe dar exponentes de β₁ y β₂ sobre el soporte."""
        assert triple_vector(T(-2, 3, -6), (-1, 2, 3)) == (1, 1, 0, 0, 0, 1)
        assert triple_vector(T(5, 1, 5), (-1, 2, 3)) is None

    def test_relevant_places(self, congruent_one):
        """Debe incluir ∞ y los primos malos."""
        assert relevant_places(congruent_one) == (Place.infinite(), Place.finite(2))


class TestLocalSolubility:
    """Tests para la resolubilidad local de los 2-cubrimientos."""

    def test_trivial_beta_everywhere(self, congruent_six):
        """Debe ser localmente resoluble en todo lugar."""
        cov = TwoCovering(congruent_six, SquareClassTriple.trivial())
        for v in (Place.infinite(), Place.finite(2), Place.finite(3), Place.finite(5)):
            assert is_locally_soluble(cov, v)

    def test_real_place(self, congruent_one):
        """Debe decidir el lugar real por signos."""
        assert not is_locally_soluble(TwoCovering(congruent_one, T(-1, -1, 1)), Place.infinite())
        assert is_locally_soluble(TwoCovering(congruent_one, T(1, -1, -1)), Place.infinite())

    def test_admissible_interval(self, congruent_one):
        """Debe dar el intervalo (−1, 0) para (1, −1, −1)."""
        assert admissible_interval(T(1, -1, -1), congruent_one) == (Fraction(-1), Fraction(0))
        assert admissible_interval(SquareClassTriple.trivial(), congruent_one) == (Fraction(1), None)

    @pytest.mark.parametrize("p,expected", [(2, 3), (3, 2), (5, 2)])
    def test_local_image_dimension(self, congruent_six, p, expected):
        """Debe alcanzar la dimensión de E(Q_p)/2E(Q_p)."""
        assert len(local_image(congruent_six, Place.finite(p))) == expected

    def test_torsion_is_locally_soluble(self, congruent_six):
        """Debe ser resoluble la imagen de la torsión en los lugares malos."""
        for beta in torsion_image(congruent_six):
            cov = TwoCovering(congruent_six, beta)
            for v in relevant_places(congruent_six):
                assert is_locally_soluble(cov, v)


class TestLocalPoints:
    """Tests para la búsqueda de puntos locales."""

    def test_real_point_example(self, congruent_one):
        """Debe dar x = −1/2 con w = (√(1/2), √(1/2), √(3/2)) en ∞."""
        cov = TwoCovering(congruent_one, T(1, -1, -1))
        point = local_point(cov, Place.infinite())
        assert point.x == Fraction(-1, 2)
        for w, square in zip(point.w, (Fraction(1, 2), Fraction(1, 2), Fraction(3, 2))):
            assert isinstance(w, RealInterval)
            assert w.lower ** 2 <= square <= w.upper ** 2
        assert point.satisfies_covering()

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_padic_point_satisfies_quadrics(self, congruent_one, p):
        """Debe verificar x − e_i = β_i·w_i² a la precisión de trabajo."""
        cov = TwoCovering(congruent_one, T(1, -1, -1))
        point = local_point(cov, Place.finite(p))
        assert point.place == Place.finite(p)
        assert point.satisfies_covering()

    def test_point_avoids_tangents(self, congruent_one):
        """Debe devolver un punto donde las tangentes no se anulan."""
        cov = TwoCovering(congruent_one, T(2, 1, 2))
        tangents = tuple(tangent_form(cov.conic(i), legendre_solve(cov.conic(i))) for i in (1, 2, 3))
        cov.attach_global_data(tangents)
        for v in (Place.infinite(), Place.finite(2), Place.finite(3)):
            point = local_point(cov, v, avoid=tangents)
            for form in tangents:
                value = point.evaluate(form)
                if isinstance(value, RealInterval):
                    assert value.sign() is not None

    def test_resampling_changes_order(self, congruent_six):
        """Debe seguir dando puntos válidos con otro orden de búsqueda."""
        cov = TwoCovering(congruent_six, SquareClassTriple.trivial())
        for seed in range(3):
            point = local_point(cov, Place.finite(3), rng=random.Random(seed))
            assert point.satisfies_covering()

    def test_foreign_tangent_rejected(self, congruent_one):
        """Debe rechazar datos globales de otro cubrimiento."""
        cov = TwoCovering(congruent_one, T(2, 1, 2))
        other = TwoCovering(congruent_one, SquareClassTriple.trivial())
        tangents = tuple(tangent_form(other.conic(i), legendre_solve(other.conic(i))) for i in (1, 2, 3))
        with pytest.raises(ValidationError, match="no pertenece"):
            cov.attach_global_data(tangents)


class TestSelmerGroup:
    """Tests para el cálculo del grupo de 2-Selmer."""

    def test_x3_minus_x(self, congruent_one):
        """Debe coincidir con la imagen de la torsión."""
        selmer = compute_selmer(congruent_one)
        assert selmer.dim == 2
        assert set(selmer.elements()) == {T(1, 1, 1), T(1, -1, -1), T(2, -1, -2), T(2, 1, 2)}
        assert selmer.naive_rank_bound == 0

    def test_x3_minus_36x(self, congruent_six):
        """Debe tener dimensión 3 y contener la imagen de (−3, 9)."""
        selmer = compute_selmer(congruent_six)
        assert selmer.dim == 3
        assert selmer.contains(descent_image(CurvePoint(-3, 9), congruent_six))

    def test_x3_minus_289x(self):
        """Debe tener dimensión 4."""
        assert compute_selmer(from_roots(-17, 0, 17)).dim == 4

    def test_basis_starts_with_torsion(self, congruent_six):
        """Debe empezar la base por la imagen de la torsión."""
        selmer = compute_selmer(congruent_six)
        torsion = [t for t in torsion_image(congruent_six) if not t.is_trivial]
        assert set(selmer.basis[:2]) <= set(torsion)
        for t in torsion:
            assert selmer.contains(t)

    def test_coordinates_round_trip(self, congruent_six):
        """Debe recuperar cada elemento a partir de sus coordenadas."""
        selmer = compute_selmer(congruent_six, workers=2)
        for element in selmer.elements():
            assert selmer.combine(selmer.coordinates(element)) == element
        assert selmer.coordinates(T(5, 1, 5)) is None

    def test_dependent_basis(self, congruent_one):
        """Debe rechazar una base dependiente."""
        with pytest.raises(ValidationError, match="no es independiente"):
            SelmerGroup(
                curve=congruent_one,
                basis=(T(2, 1, 2), T(2, 1, 2)),
                torsion_image=(),
                support=(-1, 2)
            )
