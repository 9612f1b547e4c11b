"""
Funciones de Inyección de Dependencias para el módulo cli.
La Facade sale del Composition Root compartido.
"""
from src.core.container import container
from src.modules.cli.application.facade import CliFacade


def get_cli_facade() -> CliFacade:
    """
    Inyecta la Facade del pipeline.

    Returns:
        Instancia única de CliFacade del contenedor
    """
    return container.resolve("cli_facade")
