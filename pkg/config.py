"""Configuration via pydantic-settings. Reads from .env or GSSL_* environment variables."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", env_prefix="GSSL_", extra="ignore"
    )

    # ===== SOLVER =====
    solver_mode: str = "auto"  # iterative | dense-direct | sparse-direct | auto
    solver_tolerance: float = 1e-10  # max relative column change per sweep
    solver_max_iterations: int = 10_000
    dense_cap: int = 2000  # largest n for dense-direct solves and expected_visits

    # ===== EXPERIMENT GRIDS =====
    alpha_cap: float = 0.999
    alpha_grid: list[float] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99, 0.999]
    sigma_grid: list[float] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]

    # ===== RANDOM WALKS =====
    mc_block_size: int = 4096  # walks per seeded substream

    # ===== SYSTEM =====
    max_workers: int = 1
    fixtures_dir: str = ""  # Default: ./fixtures next to this file
    log_level: str = "INFO"


settings = Settings()
