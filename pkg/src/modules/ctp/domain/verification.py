"""
Recalcula la matriz con otras elecciones y exige igualdad exacta.
"""
import logging
import random
from dataclasses import replace
from typing import List, Sequence, Tuple

from sympy import primerange

from src.core.exceptions import ConsistencyError
from src.modules.ctp.domain.pairing import CasselsTatePairing, PairingOptions
from src.modules.ctp.domain.value_objects import PairingMatrix
from src.modules.curve.domain import CurvePoint
from src.modules.numth.domain import prime_support
from src.modules.selmer.domain import SelmerGroup

logger = logging.getLogger(__name__)

RESAMPLES = 3
EXTRA_PRIMES = 5


def random_good_primes(selmer: SelmerGroup, seed: int, count: int = EXTRA_PRIMES, bound: int = 300) -> Tuple[int, ...]:
    """Primos de buena reducción que no dividen ningún β de la base."""
    excluded = set(selmer.curve.bad_primes) | set(prime_support(*(b for t in selmer.basis for b in t.reps)))
    pool = [int(p) for p in primerange(3, bound) if p not in excluded]
    rng = random.Random(f"{seed}:extra-places")
    return tuple(sorted(rng.sample(pool, min(count, len(pool)))))


def alternative_options(options: PairingOptions, selmer: SelmerGroup) -> List[Tuple[str, PairingOptions]]:
    """Reparametrización de cónicas, tres remuestreos locales y lugares ampliados."""
    base = replace(options, verify=False)
    runs = [("conics", replace(base, conic_seed=options.seed + 1))]
    runs.extend((f"resample-{k}", replace(base, resample=k)) for k in range(1, RESAMPLES + 1))
    extra = tuple(sorted(set(options.extra_places) | set(random_good_primes(selmer, options.seed))))
    runs.append(("places", replace(base, extra_places=extra)))
    return runs


def choice_independence(
    selmer: SelmerGroup,
    reference: PairingMatrix,
    options: PairingOptions,
    points: Sequence[CurvePoint] = ()
) -> List[str]:
    """
    Raises:
        ConsistencyError: Si alguna elección alternativa cambia la matriz
    """
    performed = []
    for name, alternative in alternative_options(options, selmer):
        matrix = CasselsTatePairing(selmer.curve, alternative).matrix(selmer, points)
        if matrix.entries != reference.entries:
            raise ConsistencyError(
                f"La matriz depende de las elecciones ({name})",
                context={
                    "curve": str(selmer.curve),
                    "run": name,
                    "reference": [list(row) for row in reference.entries],
                    "alternative": [list(row) for row in matrix.entries],
                }
            )
        logger.debug("Elección alternativa coincide", extra={"run": name, "curve": str(selmer.curve)})
        performed.append(name)
    return performed
