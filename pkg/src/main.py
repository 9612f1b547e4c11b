"""
Punto de entrada del servicio HTTP.
Expone el pipeline del emparejamiento bajo /api/v1/ctp.
"""
import logging

from fastapi import FastAPI

from src.core.config import settings
from src.core.exception_handlers import register_exception_handlers
from src.modules.cli.api.router import router as ctp_router


def create_app() -> FastAPI:
    """Factory de la aplicación FastAPI."""
    app = FastAPI(
        title=settings.app_name,
        debug=settings.debug,
        version=settings.app_version,
        description="2-descenso y emparejamiento de Cassels-Tate para curvas con 2-torsión racional"
    )

    register_exception_handlers(app)

    app.include_router(
        ctp_router,
        prefix=f"{settings.api_v1_prefix}/ctp",
        tags=["Cassels-Tate"]
    )

    @app.get("/")
    async def root():
        return {
            "service": settings.app_name,
            "version": settings.app_version,
            "compute": f"{settings.api_v1_prefix}/ctp/compute",
            "docs": app.docs_url
        }

    @app.get("/health")
    async def health_check():
        return {"status": "healthy"}

    return app


app = create_app()


if __name__ == "__main__":
    import uvicorn

    logging.basicConfig(level=settings.log_level)
    uvicorn.run(
        "src.main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.debug
    )
