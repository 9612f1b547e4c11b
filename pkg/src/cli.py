"""
Punto de entrada de la línea de órdenes: python -m src.cli.
"""
import logging
import sys

from src.core.config import settings
from src.modules.cli.api.parser import main

if __name__ == "__main__":
    logging.basicConfig(level=settings.log_level)
    sys.exit(main())
