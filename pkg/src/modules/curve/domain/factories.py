"""
Factory para construir curvas escindidas normalizadas.
Encapsula el cambio de variables admisible y la factorización de f sobre Q.
"""
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

from sympy import Poly, Rational as SympyRational, Symbol

from src.core.exceptions import BusinessRuleViolation, ValidationError
from src.modules.curve.domain.entities import SplitCurve
from src.modules.numth.domain import factorize

Rational = Union[int, Fraction]


class SplitCurveFactory:
    """
    Factory de SplitCurve.

    Responsabilidades:
    1. Normalizar raíces racionales a enteras de suma 0 (x → u²x + r, y → u³y)
    2. Factorizar x³ + Ax + B y rechazar 2-torsión no racional
    3. Pasar de un modelo de Weierstrass general al modelo corto
    """

    @staticmethod
    def from_roots(e1: Rational, e2: Rational, e3: Rational) -> SplitCurve:
        """
        Construye la curva y² = (x − e₁)(x − e₂)(x − e₃) normalizada.

        Raises:
            BusinessRuleViolation: Si hay raíces repetidas
        """
        roots = [Fraction(e) for e in (e1, e2, e3)]
        if len(set(roots)) != 3:
            raise BusinessRuleViolation(
                "La curva es singular: raíces repetidas",
                rule="distinct_roots",
                code="SINGULAR_CURVE",
                context={"roots": [str(e) for e in roots]}
            )
        shift = sum(roots) / 3
        centred = [e - shift for e in roots]
        denominator = 1
        for e in centred:
            denominator = denominator * e.denominator // gcd(denominator, e.denominator)
        # u mínimo con u²·e entero para todas las raíces
        u = 1
        for p, exponent in factorize(denominator):
            u *= p ** ((exponent + 1) // 2)
        scaled = [int(e * u * u) for e in centred]
        return SplitCurve(*scaled, u=Fraction(u), r=shift)

    @staticmethod
    def from_coefficients(A: Rational, B: Rational) -> SplitCurve:
        """
        Construye la curva y² = x³ + Ax + B si su 2-torsión es racional.

        Raises:
            BusinessRuleViolation: Curva singular o 2-torsión no completamente racional
        """
        A, B = Fraction(A), Fraction(B)
        if -4 * A ** 3 - 27 * B ** 2 == 0:
            raise BusinessRuleViolation(
                "La curva es singular: discriminante nulo",
                rule="nonzero_discriminant",
                code="SINGULAR_CURVE",
                context={"A": str(A), "B": str(B)}
            )
        x = Symbol("x")
        cubic = Poly(
            x ** 3 + SympyRational(A.numerator, A.denominator) * x + SympyRational(B.numerator, B.denominator),
            x,
            domain="QQ"
        )
        _, factors = cubic.factor_list()
        roots = []
        for factor, multiplicity in factors:
            if factor.degree() > 1:
                raise BusinessRuleViolation(
                    "2-torsión no completamente racional",
                    rule="rational_two_torsion",
                    code="TWO_TORSION_NOT_RATIONAL",
                    context={"A": str(A), "B": str(B), "factor": str(factor.as_expr())}
                )
            leading, constant = factor.all_coeffs()
            root = -SympyRational(constant) / SympyRational(leading)
            roots.extend([Fraction(int(root.p), int(root.q))] * multiplicity)
        return SplitCurveFactory.from_roots(*sorted(roots))

    @staticmethod
    def from_ainvs(ainvs: Sequence[int]) -> SplitCurve:
        """
        Construye la curva a partir de [a1, a2, a3, a4, a6].

        Pasa al modelo corto y² = x³ − 27c₄x − 54c₆ y elimina la potencia
        u⁴ | A, u⁶ | B más grande antes de factorizar.
        """
        if len(ainvs) != 5:
            raise ValidationError("Se esperan cinco a-invariantes", field="ainvs", value=list(ainvs))
        a1, a2, a3, a4, a6 = (int(a) for a in ainvs)
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        return SplitCurveFactory.from_coefficients(*minimal_short_model(-27 * c4, -54 * c6))


def minimal_short_model(A: int, B: int) -> Tuple[int, int]:
    """(A/d⁴, B/d⁶) con el mayor d tal que d⁴ | A y d⁶ | B."""
    scale = 1
    for p, _ in factorize(gcd(A, B) or 1):
        while A % (scale * p) ** 4 == 0 and B % (scale * p) ** 6 == 0:
            scale *= p
    return A // scale ** 4, B // scale ** 6


from_roots = SplitCurveFactory.from_roots
from_coefficients = SplitCurveFactory.from_coefficients
from_ainvs = SplitCurveFactory.from_ainvs
