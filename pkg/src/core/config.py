"""
Configuración de la aplicación usando pydantic-settings.
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Configuración global de la aplicación."""

    # Application
    app_name: str = "Cassels-Tate Core"
    app_version: str = "0.1.0"
    debug: bool = False
    log_level: str = "INFO"

    # API
    api_v1_prefix: str = "/api/v1"

    # Precisión local
    precision_base: int = 20
    precision_cap: int = 4096
    real_bits: int = 64
    local_search_levels: int = 6
    local_point_attempts: int = 4

    # Búsquedas y esfuerzo
    height_bound: int = 1000
    seed: int = 0
    workers: int = 1
    factor_trial_limit: int = 10**6
    conic_search_limit: int = 4_000_000

    # LMFDB (oráculo externo opcional)
    lmfdb_base_url: str = "https://www.lmfdb.org/api/ec_curvedata/"
    lmfdb_cache_dir: str = ".lmfdb_cache"
    lmfdb_offline: bool = False
    lmfdb_timeout: float = 10.0
    lmfdb_min_interval: float = 1.0

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False
    )


# Singleton de configuración
settings = Settings()
