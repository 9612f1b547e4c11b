"""
Jerarquía de errores compartida por todos los módulos.

Cada error lleva un código estable y un contexto (curva, terna, lugar,
precisión) que la línea de órdenes y la API muestran tal cual.
"""
from datetime import datetime, timezone
from typing import Any, Dict, Optional


def _with_context(kwargs: Dict[str, Any], **entries: Any) -> Dict[str, Any]:
    context = dict(kwargs.pop("context", None) or {})
    context.update({key: value for key, value in entries.items() if value is not None})
    return context


class DomainError(Exception):
    """
    Raíz de la jerarquía.

    Args:
        message: Texto para el usuario
        code: Código estable; por defecto el nombre de la clase en mayúsculas
        context: Datos del fallo, serializables con str
        cause: Excepción de origen, se conserva como __cause__
    """

    def __init__(
        self,
        message: str,
        *,
        code: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
        cause: Optional[Exception] = None
    ):
        super().__init__(message)
        self.message = message
        self.code = code or type(self).__name__.upper()
        self.context = dict(context or {})
        self.timestamp = datetime.now(timezone.utc)
        if cause is not None:
            self.__cause__ = cause

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error_type": type(self).__name__,
            "code": self.code,
            "message": self.message,
            "context": self.context,
            "timestamp": self.timestamp.isoformat(),
        }


class ValidationError(DomainError):
    """
    Entrada mal formada: racional nulo, clase no libre de cuadrados,
    terna que no cumple la norma, línea de lote ilegible.
    """

    def __init__(self, message: str, *, field: Optional[str] = None, value: Any = None, **kwargs):
        context = _with_context(kwargs, field=field, invalid_value=None if value is None else str(value))
        super().__init__(message, context=context, **kwargs)


class BusinessRuleViolation(DomainError):
    """
    La curva no cumple las hipótesis: discriminante nulo o 2-torsión
    no racional. La regla incumplida queda en context["violated_rule"].
    """

    def __init__(self, message: str, *, rule: Optional[str] = None, **kwargs):
        super().__init__(message, context=_with_context(kwargs, violated_rule=rule), **kwargs)


class NotFoundError(DomainError):
    """Etiqueta u otra clave sin registro."""

    def __init__(self, entity_name: str, entity_id: str, **kwargs):
        self.entity_name = entity_name
        self.entity_id = entity_id
        context = _with_context(kwargs, entity_type=entity_name, entity_id=entity_id)
        super().__init__(f"{entity_name} '{entity_id}' no encontrada", context=context, **kwargs)


class InfrastructureError(DomainError):
    """Red, JSON mal formado o caché ilegible. En lmfdb se degrada a aviso."""


class ComputationError(DomainError):
    """
    Límite de esfuerzo alcanzado sin una respuesta garantizada.

    Nunca se devuelve un resultado dudoso: se lanza esta excepción.
    """
    pass


class FactorizationIncompleteError(ComputationError):
    """Un factor compuesto sobrevive al esfuerzo configurado."""

    def __init__(self, n: int, survivor: int, **kwargs):
        context = _with_context(kwargs, n=str(n), survivor=str(survivor))
        super().__init__(
            f"Factorización incompleta de {n}: sobrevive el compuesto {survivor}",
            code="FACTORIZATION_INCOMPLETE",
            context=context,
            **kwargs
        )


class PrecisionExhaustedError(ComputationError):
    """La escalada de precisión superó el tope configurado."""

    def __init__(self, message: str, *, precision: int, cap: int, **kwargs):
        context = _with_context(kwargs, precision=precision, cap=cap)
        super().__init__(message, code="PRECISION_EXHAUSTED", context=context, **kwargs)


class IndistinguishableFromZeroError(ComputationError):
    """Un valor local no se distingue de 0 con la precisión disponible."""
    pass


class SearchExhaustedError(ComputationError):
    """Una búsqueda acotada terminó sin encontrar lo que la teoría garantiza."""
    pass


class ConsistencyError(DomainError):
    """
    Violación de un invariante interno: indica un error de implementación.

    Ejemplos:
    - s_kj·δ_{v,i} distinto de L_i(q_v)
    - Cónica sin puntos para un elemento de Selmer
    - Matriz de emparejamiento no simétrica
    """
    pass
