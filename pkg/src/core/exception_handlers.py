"""
Exception Handlers globales para FastAPI.
Traduce la jerarquía de DomainError a respuestas HTTP homogéneas.
"""
import json
import logging
from typing import Any, Awaitable, Callable, Dict, Optional, Type

from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from src.core.exceptions import (
    BusinessRuleViolation,
    ComputationError,
    ConsistencyError,
    DomainError,
    InfrastructureError,
    NotFoundError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Handler = Callable[[Request, Exception], Awaitable[JSONResponse]]


class ErrorResponse:
    """
    Cuerpo estandarizado de las respuestas de error.
    """

    @staticmethod
    def create(
        error_type: str,
        message: str,
        code: str,
        context: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        error: Dict[str, Any] = {"type": error_type, "code": code, "message": message}
        if context:
            error["context"] = json.loads(json.dumps(context, default=str))
        return {"success": False, "error": error}


def domain_handler(status_code: int, level: int, public_message: Optional[str] = None) -> Handler:
    """
    Construye un handler para una familia de DomainError.

    Args:
        status_code: Código HTTP de la respuesta
        level: Nivel de log
        public_message: Si se indica, sustituye al mensaje y oculta el contexto
    """

    async def handler(request: Request, exc: DomainError) -> JSONResponse:
        logger.log(
            level,
            f"{type(exc).__name__}: {exc.message}",
            extra={"error_code": exc.code, "context": exc.context, "path": request.url.path},
            exc_info=level >= logging.ERROR
        )
        return JSONResponse(
            status_code=status_code,
            content=ErrorResponse.create(
                error_type=type(exc).__name__,
                message=public_message or exc.message,
                code=exc.code,
                context=None if public_message else exc.context
            )
        )

    return handler


async def request_validation_error_handler(request: Request, exc: RequestValidationError) -> JSONResponse:
    """Cuerpo de la petición que no valida contra RunConfig."""
    logger.warning("Petición inválida", extra={"path": request.url.path, "errors": str(exc.errors())})
    return JSONResponse(
        status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
        content=ErrorResponse.create(
            error_type="RequestValidationError",
            message="Datos de entrada inválidos",
            code="INVALID_REQUEST_DATA",
            context={"errors": exc.errors()}
        )
    )


async def generic_exception_handler(request: Request, exc: Exception) -> JSONResponse:
    logger.exception(f"Excepción no controlada: {exc}", extra={"path": request.url.path})
    return JSONResponse(
        status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
        content=ErrorResponse.create(
            error_type="InternalServerError",
            message="Error interno del servidor",
            code="INTERNAL_SERVER_ERROR"
        )
    )


# De lo más específico a lo más genérico
DOMAIN_HANDLERS: Dict[Type[DomainError], Handler] = {
    ValidationError: domain_handler(status.HTTP_400_BAD_REQUEST, logging.WARNING),
    BusinessRuleViolation: domain_handler(status.HTTP_422_UNPROCESSABLE_ENTITY, logging.WARNING),
    NotFoundError: domain_handler(status.HTTP_404_NOT_FOUND, logging.INFO),
    InfrastructureError: domain_handler(
        status.HTTP_503_SERVICE_UNAVAILABLE, logging.ERROR, "Servicio externo temporalmente no disponible"
    ),
    ComputationError: domain_handler(status.HTTP_500_INTERNAL_SERVER_ERROR, logging.ERROR),
    ConsistencyError: domain_handler(status.HTTP_500_INTERNAL_SERVER_ERROR, logging.ERROR),
    DomainError: domain_handler(status.HTTP_400_BAD_REQUEST, logging.ERROR),
}


def register_exception_handlers(app: FastAPI) -> None:
    """Registra los handlers de dominio, de validación de la petición y el genérico."""
    for exc_class, handler in DOMAIN_HANDLERS.items():
        app.add_exception_handler(exc_class, handler)
    app.add_exception_handler(RequestValidationError, request_validation_error_handler)
    app.add_exception_handler(Exception, generic_exception_handler)
    logger.debug("Exception handlers registrados")
