"""
2-descenso completo: espacio de candidatos y grupo de Selmer.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from src.core.config import settings
from src.core.exceptions import ConsistencyError
from src.modules.curve.domain import SplitCurve, SquareClassTriple, descent_image, torsion_point
from src.modules.numth.domain import Place
from src.modules.numth.domain import gf2
from src.modules.selmer.domain.local import local_image, pair_vector
from src.modules.selmer.domain.value_objects import SelmerGroup, triple_vector

logger = logging.getLogger(__name__)


def support_of(curve: SplitCurve) -> Tuple[int, ...]:
    """−1 y los primos de mala reducción (incluido 2)."""
    return (-1,) + curve.bad_primes


def relevant_places(curve: SplitCurve) -> Tuple[Place, ...]:
    return (Place.infinite(),) + tuple(Place.finite(p) for p in curve.bad_primes)


def candidate_space(curve: SplitCurve) -> List[SquareClassTriple]:
    """
    Generadores de las ternas (b₁, b₂, b₁b₂) soportadas en {−1} ∪ primos malos.

    El orden (s, 1, s) para cada s y luego (1, s, s) coincide con las
    coordenadas de triple_vector.
    """
    support = support_of(curve)
    return (
        [SquareClassTriple.from_ints(s, 1, s) for s in support]
        + [SquareClassTriple.from_ints(1, s, s) for s in support]
    )


def torsion_image(curve: SplitCurve) -> List[SquareClassTriple]:
    return [descent_image(torsion_point(curve, i), curve) for i in range(4)]


def _conditions(curve: SplitCurve, place: Place, generators: List[SquareClassTriple]) -> np.ndarray:
    """Filas c con c·x = 0 si y solo si Σ x_g·g es localmente resoluble en place."""
    image = gf2.as_gf2(local_image(curve, place))
    annihilator = gf2.nullspace(image)
    if annihilator.shape[0] == 0:
        return np.zeros((0, len(generators)), dtype=np.uint8)
    images = gf2.as_gf2([pair_vector(list(g.reps), place) for g in generators])
    return (annihilator.astype(np.int64) @ images.T.astype(np.int64) % 2).astype(np.uint8)


def compute_selmer(curve: SplitCurve, workers: Optional[int] = None) -> SelmerGroup:
    """
    Grupo de 2-Selmer: candidatos resolubles en ∞, en 2 y en cada primo malo.

    Args:
        curve: Curva escindida
        workers: Hilos para las condiciones locales (por defecto la configuración)

    Raises:
        ConsistencyError: Si la imagen de la torsión no cae dentro del grupo
    """
    workers = workers or settings.workers
    support = support_of(curve)
    generators = candidate_space(curve)
    places = relevant_places(curve)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda v: _conditions(curve, v, generators), places))
    else:
        blocks = [_conditions(curve, v, generators) for v in places]
    constraints = np.vstack(blocks)
    selmer_rows = gf2.nullspace(constraints)

    torsion = torsion_image(curve)
    torsion_rows = [triple_vector(t, support) for t in torsion]
    for triple, row in zip(torsion, torsion_rows):
        if row is None or not gf2.in_span(selmer_rows, row):
            raise ConsistencyError(
                f"La imagen de la torsión {triple} no es localmente resoluble",
                context={"curve": str(curve), "triple": str(triple)}
            )

    rows = [tuple(int(b) for b in row) for row in torsion_rows] + [tuple(int(b) for b in row) for row in selmer_rows]
    chosen = gf2.extend_independent(rows, len(generators))
    basis = [_from_vector(rows[index], generators) for index in chosen]

    group = SelmerGroup(
        curve=curve,
        basis=tuple(basis),
        torsion_image=tuple(dict.fromkeys(torsion)),
        support=support
    )
    logger.info(
        "Grupo de Selmer calculado",
        extra={"curve": str(curve), "dim": group.dim, "places": [str(v) for v in places]}
    )
    return group


def _from_vector(vector, generators: List[SquareClassTriple]) -> SquareClassTriple:
    result = SquareClassTriple.trivial()
    for bit, generator in zip(vector, generators):
        if bit:
            result = result * generator
    return result
