"""Configuration settings for monoreg."""

import logging

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="MONOREG_",
        case_sensitive=False,
    )

    # API Settings
    app_name: str = "monoreg"
    app_version: str = "0.1.0"
    api_prefix: str = "/api/v1"
    host: str = "127.0.0.1"
    port: int = 8000
    cors_origins: list[str] = ["*"]

    # Algebra Settings
    default_field: str = "q"
    betti_mu_cap: int = 16
    betti_class_cap: int = 2048
    closure_box_cap: int = 20000
    witness_box_cap: int = 4096
    s_cap: int = 8
    crosscheck_k_max: int = 6

    # Harness Settings
    grid_m_max: int = 2
    grid_k_max: int = 2
    grid_s_max: int = 2
    identity_sample_cap: int = 24
    attach_witness: bool = True
    compare_fields: bool = True

    # Logging
    log_level: str = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


settings = Settings()


def configure_logging(level: str | None = None) -> None:
    """Configure the root logger from settings."""
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format=settings.log_format,
    )
