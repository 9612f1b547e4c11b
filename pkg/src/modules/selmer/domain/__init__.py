"""Módulo de dominio de Selmer: 2-descenso completo y puntos locales."""
from src.modules.selmer.domain.descent import (
    candidate_space,
    compute_selmer,
    relevant_places,
    support_of,
    torsion_image,
)
from src.modules.selmer.domain.entities import TwoCovering
from src.modules.selmer.domain.local import (
    admissible_interval,
    image_dimension,
    is_locally_soluble,
    local_image,
    local_point,
)
from src.modules.selmer.domain.value_objects import LocalCoveringPoint, SelmerGroup, triple_vector

__all__ = [
    "candidate_space",
    "compute_selmer",
    "relevant_places",
    "support_of",
    "torsion_image",
    "TwoCovering",
    "admissible_interval",
    "image_dimension",
    "is_locally_soluble",
    "local_image",
    "local_point",
    "LocalCoveringPoint",
    "SelmerGroup",
    "triple_vector",
]
