"""Módulo de dominio del emparejamiento de Cassels-Tate."""
from src.modules.ctp.domain.pairing import (
    CasselsTatePairing,
    PairingOptions,
    cassels_product,
    contributing_places,
    delta_crosscheck,
    delta_product,
    global_data,
    local_factor,
    normalization_product,
    pair,
    pairing_matrix,
)
from src.modules.ctp.domain.value_objects import (
    DeltaWitness,
    LocalFactorRecord,
    PairingMatrix,
    PairingValue,
)
from src.modules.ctp.domain.verification import (
    alternative_options,
    choice_independence,
    random_good_primes,
)

__all__ = [
    "CasselsTatePairing",
    "PairingOptions",
    "cassels_product",
    "contributing_places",
    "delta_crosscheck",
    "delta_product",
    "global_data",
    "local_factor",
    "normalization_product",
    "pair",
    "pairing_matrix",
    "DeltaWitness",
    "LocalFactorRecord",
    "PairingMatrix",
    "PairingValue",
    "alternative_options",
    "choice_independence",
    "random_good_primes",
]
