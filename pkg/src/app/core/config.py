from typing import Literal
from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import field_validator

from src.app.core.logging import get_logger


logger = get_logger()


class Settings(BaseSettings):

    ENVIRONMENT: Literal["local", "ci"] = "local"
    PROJECT_NAME: str = "qnmlab"
    PROJECT_DESCRIPTION: str = "Quasinormal modes, mode volumes and Purcell factors of leaky cavities"

    OUTPUT_DIR: str = "data/results"
    LOGS_DIR: str = "logs"

    QNMLAB_THREADS: int = 1

    # root finding
    ROOT_TOL_1D: float = 1e-12
    ROOT_TOL_2D: float = 1e-9
    ROOT_MAX_ITER: int = 50

    # eigen solves
    EIGEN_RESIDUAL_TOL: float = 1e-8
    DENSE_EIG_LIMIT: int = 400
    EIGEN_SHIFT_OFFSET: float = 1e-3
    COLLISION_THRESHOLD: float = 1e-3

    # 1D discretization
    SAMPLES_PER_WAVELENGTH: int = 64
    SEED_SCAN_POINTS_1D: int = 400

    # 2D discretization
    MESH_RESOLUTION: int = 16
    MESH_SUBSAMPLES: int = 8
    SEED_SCAN_MIN: float = 0.38
    SEED_SCAN_MAX: float = 0.46
    SEED_SCAN_STEP: float = 0.002

    # quadrature for norms and volumes
    NORM_RADIUS_MARGIN: float = 3.0
    QUAD_PANEL_WIDTH: float = 0.5
    QUAD_RADIAL_NODES: int = 8
    QUAD_ANGULAR_DENSITY: float = 6.0
    QUAD_MIN_ANGULAR: int = 64
    FIELD_CHUNK_SIZE: int = 512

    # mode volumes
    ANTINODE_GRID_POINTS: int = 201
    NODE_GUARD: float = 1e-12
    SWEEP_POINTS: int = 12
    SWEEP_START_MARGIN: float = 0.5
    SWEEP_MAX_RADIUS: float = 10.0

    # spectra
    SPECTRUM_POINTS: int = 201
    SPECTRUM_HALF_WIDTH: float = 10.0

    # artifacts
    FIELD_AXIS_EXTENT: float = 12.0
    FIELD_AXIS_POINTS: int = 481
    FIELD_XY_POINTS: int = 81
    CSV_FLOAT_FORMAT: str = "%.11e"

    model_config = SettingsConfigDict(
        env_file=".envs/.env.local",
        env_ignore_empty=True,
        extra="ignore",
        case_sensitive=True
    )

    @property
    def output_path(self) -> Path:
        return Path(self.OUTPUT_DIR)

    @property
    def logs_path(self) -> Path:
        return Path(self.LOGS_DIR)

    @field_validator("QNMLAB_THREADS")
    def validate_threads(cls, v):
        if v < 1:
            raise ValueError("QNMLAB_THREADS must be at least 1")
        return v

    @field_validator("MESH_RESOLUTION", "MESH_SUBSAMPLES", "QUAD_RADIAL_NODES")
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError("discretization counts must be positive")
        return v


settings = Settings()
