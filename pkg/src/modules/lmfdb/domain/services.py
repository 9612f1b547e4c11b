"""
Contraste del resultado del emparejamiento con un registro externo.
"""
import logging

from src.modules.lmfdb.domain.value_objects import ConsistencyVerdict, ExternalCurveRecord, VerdictStatus

logger = logging.getLogger(__name__)


def compare(refined_bound: int, pairing_rank: int, record: ExternalCurveRecord) -> ConsistencyVerdict:
    """
    Args:
        refined_bound: dim del núcleo del emparejamiento − 2
        pairing_rank: Rango sobre F₂ de la matriz
        record: Registro externo

    Returns:
        Veredicto con banderas y avisos; los desajustes nunca son fatales
    """
    flags, warnings = [], []
    gap = refined_bound - record.rank
    if gap < 0:
        status = VerdictStatus.INCONSISTENT
        flags.append("rank_exceeds_bound")
        warnings.append(
            f"El rango publicado {record.rank} supera la cota refinada {refined_bound}: posible error de implementación"
        )
    elif gap == 0:
        status = VerdictStatus.SHARP
        flags.append("bound_sharp")
    else:
        status = VerdictStatus.GAP
        flags.append("gap")
        warnings.append(f"Hueco de {gap}: posible Sha[4] o emparejamiento insuficiente")

    two_part = record.sha_two_part
    if two_part is not None and two_part > 1 and pairing_rank == 0:
        flags.append("expected_nonzero_pairing")
        warnings.append(f"La parte 2 de Sha es {two_part} pero la matriz es nula")

    for message in warnings:
        logger.warning(message, extra={"label": record.label, "status": str(status)})
    return ConsistencyVerdict(status=status, gap=gap, flags=tuple(flags), warnings=tuple(warnings))
