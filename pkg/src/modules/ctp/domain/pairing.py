"""
Emparejamiento de Cassels-Tate en el 2-Selmer de una curva escindida.

Ruta principal: producto de símbolos de Hilbert (L_i(q_v), β'_i)_v sobre
los lugares que contribuyen. Ruta de verificación: los δ_{v,i} locales.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.core.config import settings
from src.core.exceptions import ConsistencyError, IndistinguishableFromZeroError, PrecisionExhaustedError
from src.modules.conic.domain import TangentForm, legendre_solve, tangent_form
from src.modules.ctp.domain.value_objects import (
    DeltaWitness,
    LocalFactorRecord,
    PairingMatrix,
    PairingValue,
)
from src.modules.curve.domain import CYCLIC, CurvePoint, SplitCurve, SquareClassTriple, descent_image
from src.modules.numth.domain import Place, PrecisionPolicy, RealInterval, hilbert_symbol, prime_support
from src.modules.numth.domain import gf2
from src.modules.selmer.domain import LocalCoveringPoint, SelmerGroup, TwoCovering, local_point

logger = logging.getLogger(__name__)


def global_data(cov: TwoCovering, rng: Optional[random.Random] = None) -> Tuple[TangentForm, ...]:
    """
    Punto racional q_i de cada H_i y su tangente L_i; se guardan en el cubrimiento.

    Raises:
        ConsistencyError: Si alguna H_i no tiene puntos (β no está en Selmer)
    """
    if cov.global_data is not None and rng is None:
        return cov.global_data
    tangents = []
    for i in (1, 2, 3):
        conic = cov.conic(i)
        point = legendre_solve(conic, rng)
        if point is None:
            raise ConsistencyError(
                f"H_{i} sin puntos racionales para un elemento de Selmer",
                context={"curve": str(cov.curve), "beta": str(cov.beta), "conic": str(conic)}
            )
        tangents.append(tangent_form(conic, point))
    cov.attach_global_data(tuple(tangents))
    return cov.global_data


def contributing_places(
    curve: SplitCurve,
    a: SquareClassTriple,
    a_prime: SquareClassTriple,
    tangents: Sequence[TangentForm],
    extra: Iterable[int] = ()
) -> Tuple[Place, ...]:
    """
    {∞, 2} ∪ primos malos ∪ primos de β, β' ∪ primos de los contenidos de las tangentes.
    """
    primes = {2, *curve.bad_primes, *extra}
    primes.update(prime_support(*a.reps, *a_prime.reps, *(t.scale for t in tangents)))
    return (Place.infinite(),) + tuple(Place.finite(p) for p in sorted(primes))


def cassels_product(point: LocalCoveringPoint, tangents: Sequence[TangentForm], a_prime: SquareClassTriple) -> int:
    """∏_i (L_i(q_v), β'_i)_v."""
    result = 1
    for i, tangent in enumerate(tangents, start=1):
        b = a_prime.component(i)
        if b == 1:
            continue
        result *= hilbert_symbol(point.evaluate(tangent), b, point.place)
    return result


def local_factor(
    cov: TwoCovering,
    a_prime: SquareClassTriple,
    v: Place,
    *,
    policy: Optional[PrecisionPolicy] = None,
    rng: Optional[random.Random] = None
) -> int:
    """Factor local en v con un punto local que evita las tres tangentes."""
    tangents = global_data(cov)
    point = local_point(cov, v, avoid=tangents, policy=policy, rng=rng)
    return cassels_product(point, tangents, a_prime)


def _vanishes(value) -> bool:
    if isinstance(value, RealInterval):
        return value.contains_zero()
    return False


def delta_crosscheck(cov: TwoCovering, point: LocalCoveringPoint) -> List[DeltaWitness]:
    """
    δ_{v,i} = 2(T* + (β_k·w_k·Γ*_k − β_j·w_j·Γ*_j)/s_kj) con s_kj = e_k − e_j,
    y comprobación de s_kj·δ_{v,i} = −c_i·L_i(q_v).

    Raises:
        ConsistencyError: Si la identidad falla a la precisión de trabajo
        IndistinguishableFromZeroError: Si δ se cancela con la precisión del punto
    """
    witnesses = []
    for i, tangent in enumerate(global_data(cov), start=1):
        j, k = CYCLIC[i]
        s_kj = cov.curve.e(k) - cov.curve.e(j)
        gamma_j, gamma_k, t = tangent.base_point.coords
        terms = []
        if gamma_k:
            terms.append(Fraction(2 * cov.beta.component(k) * gamma_k, s_kj) * point.w[k - 1])
        if gamma_j:
            terms.append(Fraction(-2 * cov.beta.component(j) * gamma_j, s_kj) * point.w[j - 1])
        delta = reduce(lambda acc, term: acc + term, terms, 2 * t)
        value = point.evaluate(tangent)
        try:
            residual = s_kj * delta + tangent.scale * value
        except IndistinguishableFromZeroError:
            residual = None
        if residual is not None and not _vanishes(residual):
            raise ConsistencyError(
                f"s_kj·δ distinto de la tangente en {point.place}",
                context={
                    "curve": str(cov.curve),
                    "beta": str(cov.beta),
                    "place": str(point.place),
                    "index": i,
                    "residual": str(residual),
                }
            )
        witnesses.append(DeltaWitness(point.place, i, delta, value, s_kj, tangent.scale))
    return witnesses


def delta_product(witnesses: Sequence[DeltaWitness], a_prime: SquareClassTriple) -> int:
    """∏_i (δ_{v,i}, β'_i)_v."""
    result = 1
    for witness in witnesses:
        b = a_prime.component(witness.index)
        if b != 1:
            result *= hilbert_symbol(witness.delta, b, witness.place)
    return result


def normalization_product(witnesses: Sequence[DeltaWitness], a_prime: SquareClassTriple) -> int:
    """∏_i (−c_i·s_kj, β'_i)_v: diferencia local entre la ruta δ y la de Cassels."""
    result = 1
    for witness in witnesses:
        b = a_prime.component(witness.index)
        if b != 1:
            result *= hilbert_symbol(-witness.tangent_scale * witness.scale, b, witness.place)
    return result


@dataclass(frozen=True)
class PairingOptions:
    """
    Elecciones de un cálculo del emparejamiento.

    conic_seed reparametriza los puntos de las cónicas; resample cambia el
    orden de búsqueda de los puntos locales; extra_places amplía los lugares.
    """
    policy: PrecisionPolicy = field(default_factory=PrecisionPolicy.from_settings)
    seed: int = 0
    conic_seed: Optional[int] = None
    resample: int = 0
    extra_places: Tuple[int, ...] = ()
    verify: bool = False
    workers: int = 1


class CasselsTatePairing:
    """
    Servicio de dominio que calcula el emparejamiento sobre una curva fija.

    Guarda los cubrimientos con sus datos globales y los puntos locales
    por (elemento, lugar), de modo que cada fila reutiliza sus cálculos.
    """

    def __init__(self, curve: SplitCurve, options: Optional[PairingOptions] = None):
        self.curve = curve
        self.options = options or PairingOptions()
        self._coverings: Dict[SquareClassTriple, TwoCovering] = {}
        self._points: Dict[Tuple[SquareClassTriple, Place], LocalCoveringPoint] = {}
        self._records: Dict[Tuple[SquareClassTriple, SquareClassTriple], Tuple[LocalFactorRecord, ...]] = {}
        self.delta_checks = 0

    def covering(self, a: SquareClassTriple) -> TwoCovering:
        cov = self._coverings.get(a)
        if cov is None:
            cov = TwoCovering(self.curve, a)
            rng = None
            if self.options.conic_seed is not None:
                rng = random.Random(f"{self.options.seed}:{self.options.conic_seed}:{a}")
            global_data(cov, rng)
            cov = self._coverings.setdefault(a, cov)
        return cov

    def local_point(self, a: SquareClassTriple, v: Place, attempt: int = 0) -> LocalCoveringPoint:
        """
        Punto local cacheado por (a, v). Con attempt > 0 se descarta el punto
        anterior y se elige otro con otra semilla y la precisión escalada.
        """
        key = (a, v)
        point = self._points.get(key) if attempt == 0 else None
        if point is None:
            cov = self.covering(a)
            rng = random.Random(f"{self.options.seed}:{self.options.resample}:{attempt}:{a}:{v}")
            policy = self._escalated(attempt)
            point = local_point(cov, v, avoid=cov.tangents, policy=policy, rng=rng)
            if attempt == 0:
                point = self._points.setdefault(key, point)
            else:
                self._points[key] = point
        return point

    def _escalated(self, attempt: int) -> PrecisionPolicy:
        policy = self.options.policy
        if attempt == 0:
            return policy
        return replace(
            policy,
            base=min(policy.base << attempt, policy.cap),
            real_bits=policy.real_bits << attempt
        )

    def places(self, a: SquareClassTriple, a_prime: SquareClassTriple) -> Tuple[Place, ...]:
        return contributing_places(self.curve, a, a_prime, self.covering(a).tangents, self.options.extra_places)

    def _local(self, a: SquareClassTriple, a_prime: SquareClassTriple, v: Place) -> Tuple[int, Optional[int]]:
        """
        Factor local y, en modo verificación, el mismo factor por la ruta δ.

        Raises:
            ConsistencyError: Si las dos rutas discrepan en v
            PrecisionExhaustedError: Si ningún punto local resuelve la evaluación
        """
        attempts = max(1, settings.local_point_attempts)
        for attempt in range(attempts):
            point = self.local_point(a, v, attempt)
            try:
                return self._evaluate(a, a_prime, point)
            except IndistinguishableFromZeroError as e:
                logger.warning(
                    "Cancelación en la evaluación local, se elige otro punto",
                    extra={"place": str(v), "a": str(a), "attempt": attempt, "error": e.message}
                )
        raise PrecisionExhaustedError(
            f"Evaluación local sin resolver en {v} tras {attempts} puntos",
            precision=point.precision,
            cap=self.options.policy.cap,
            context={"curve": str(self.curve), "a": str(a), "a_prime": str(a_prime), "place": str(v)}
        )

    def _evaluate(
        self,
        a: SquareClassTriple,
        a_prime: SquareClassTriple,
        point: LocalCoveringPoint
    ) -> Tuple[int, Optional[int]]:
        cov = self.covering(a)
        factor = cassels_product(point, cov.tangents, a_prime)
        if not self.options.verify:
            return factor, None
        witnesses = delta_crosscheck(cov, point)
        via_delta = delta_product(witnesses, a_prime)
        if via_delta != factor * normalization_product(witnesses, a_prime):
            raise ConsistencyError(
                f"Ruta δ y ruta de Cassels discrepan en {point.place}",
                context={"curve": str(self.curve), "a": str(a), "a_prime": str(a_prime), "place": str(point.place)}
            )
        self.delta_checks += 1
        return factor, via_delta

    def pair(self, a: SquareClassTriple, a_prime: SquareClassTriple) -> PairingValue:
        """
        ⟨a, a'⟩ como producto de factores locales.

        Raises:
            ConsistencyError: En modo verificación, si la ruta δ global discrepa
        """
        total, delta_total = 1, 1
        records = []
        for v in self.places(a, a_prime):
            factor, via_delta = self._local(a, a_prime, v)
            total *= factor
            if via_delta is not None:
                delta_total *= via_delta
            records.append(LocalFactorRecord(v, a, a_prime, factor))
            logger.debug(
                "Factor local",
                extra={"place": str(v), "a": str(a), "a_prime": str(a_prime), "factor": factor}
            )
        if self.options.verify and delta_total != total:
            raise ConsistencyError(
                "El producto global de la ruta δ no coincide con el de Cassels",
                context={"curve": str(self.curve), "a": str(a), "a_prime": str(a_prime)}
            )
        self._records[(a, a_prime)] = tuple(records)
        return PairingValue.from_sign(total)

    def records(self, a: SquareClassTriple, a_prime: SquareClassTriple) -> Tuple[LocalFactorRecord, ...]:
        return self._records.get((a, a_prime), ())

    def matrix(self, selmer: SelmerGroup, points: Sequence[CurvePoint] = ()) -> PairingMatrix:
        """
        Matriz en la base de Selmer, con sus comprobaciones estructurales.

        Raises:
            ConsistencyError: Asimetría, diagonal no nula, rango impar o un
                punto racional fuera del núcleo
        """
        basis = selmer.basis
        size = len(basis)
        for a in basis:
            self.covering(a)
        cells = [(r, s) for r in range(size) for s in range(size) if r <= s or self.options.verify]

        def compute(cell):
            r, s = cell
            return cell, self.pair(basis[r], basis[s]).bit

        if self.options.workers > 1 and len(cells) > 1:
            with ThreadPoolExecutor(max_workers=self.options.workers) as pool:
                values = dict(pool.map(compute, cells))
        else:
            values = dict(compute(cell) for cell in cells)

        entries = tuple(
            tuple(values.get((r, s), values.get((s, r))) for s in range(size))
            for r in range(size)
        )
        context = {"curve": str(self.curve), "entries": [list(row) for row in entries]}
        if any(entries[r][r] for r in range(size)):
            raise ConsistencyError("La diagonal del emparejamiento no es nula", context=context)
        if any(entries[r][s] != entries[s][r] for r in range(size) for s in range(size)):
            raise ConsistencyError("La matriz del emparejamiento no es simétrica", context=context)

        kernel_rows = gf2.nullspace(np.array(entries, dtype=np.uint8)) if size else np.zeros((0, 0), dtype=np.uint8)
        if (size - kernel_rows.shape[0]) % 2:
            raise ConsistencyError("El rango del emparejamiento es impar", context=context)
        kernel = tuple(selmer.combine(row) for row in kernel_rows)

        for point in points:
            image = descent_image(point, self.curve)
            coordinates = selmer.coordinates(image)
            if coordinates is None:
                raise ConsistencyError(
                    f"La imagen de {point} no está en el grupo de Selmer",
                    context={"curve": str(self.curve), "point": str(point), "image": str(image)}
                )
            column = np.array(coordinates, dtype=np.int64)
            if size and (np.array(entries, dtype=np.int64) @ column % 2).any():
                raise ConsistencyError(
                    f"La imagen de {point} no está en el núcleo del emparejamiento",
                    context={**context, "point": str(point), "image": str(image)}
                )

        matrix = PairingMatrix(basis=basis, entries=entries, kernel_basis=kernel)
        logger.info(
            "Matriz del emparejamiento calculada",
            extra={"curve": str(self.curve), "dim": size, "rank": matrix.rank, "delta_checks": self.delta_checks}
        )
        return matrix

    def local_log(self, selmer: SelmerGroup) -> List[LocalFactorRecord]:
        """Registros de factores locales en orden (fila, columna, lugar)."""
        log = []
        for a in selmer.basis:
            for a_prime in selmer.basis:
                log.extend(self.records(a, a_prime))
        return log


def pair(
    a: SquareClassTriple,
    a_prime: SquareClassTriple,
    curve: SplitCurve,
    options: Optional[PairingOptions] = None
) -> PairingValue:
    return CasselsTatePairing(curve, options).pair(a, a_prime)


def pairing_matrix(
    selmer: SelmerGroup,
    points: Sequence[CurvePoint] = (),
    options: Optional[PairingOptions] = None
) -> PairingMatrix:
    return CasselsTatePairing(selmer.curve, options).matrix(selmer, points)
