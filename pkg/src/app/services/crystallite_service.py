import numpy as np
import pandas as pd

from src.app.core.config import settings
from src.app.core.exceptions import ConfigurationError, QnmLabError
from src.app.core.logging import get_logger
from src.app.schemas.common import UNITS_2D
from src.app.schemas.requests import RunConfig
from src.app.schemas.responses import QnmReport
from src.app.services.artifact_service import ArtifactService
from src.app.services.mode_service import ModeService
from src.qnm2d.field import Qnm2D
from src.qnm2d.solver import operator_residual
from src.structures.models import RodLattice2D

logger = get_logger()


class CrystalliteService:
    """crystallite-qnm: the defect QNM of a rod crystallite with its field maps."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.modes = ModeService(config.threads)
        self.artifacts = ArtifactService(config.out)

    @staticmethod
    def axis_table(mode: Qnm2D) -> pd.DataFrame:
        """|f| along the x axis over +-FIELD_AXIS_EXTENT lattice constants."""
        a = mode.lattice.a
        x = np.linspace(-settings.FIELD_AXIS_EXTENT, settings.FIELD_AXIS_EXTENT, settings.FIELD_AXIS_POINTS)
        f = mode.field_at(np.column_stack([x * a, np.zeros_like(x)]))
        return pd.DataFrame({"x": x, "f_abs": np.abs(f)})

    @staticmethod
    def plane_table(mode: Qnm2D) -> pd.DataFrame:
        """f on a square grid covering the crystallite and one lattice constant around it."""
        half = mode.lattice.circumradius + mode.lattice.a
        axis = np.linspace(-half, half, settings.FIELD_XY_POINTS)
        xx, yy = np.meshgrid(axis, axis, indexing="ij")
        f = mode.field_at(np.column_stack([xx.ravel(), yy.ravel()]))
        return pd.DataFrame({"x": xx.ravel(), "y": yy.ravel(), "f_re": f.real, "f_im": f.imag, "f_abs": np.abs(f)})

    def run(self) -> QnmReport:
        lattice = self.config.single_structure()
        if not isinstance(lattice, RodLattice2D):
            raise ConfigurationError(f"crystallite-qnm needs a rod lattice, got '{lattice.name}' ({lattice.type})")

        try:
            mode = self.modes.solve_crystallite(lattice, self.config.guess_complex, self.config.resolution)
            volume = self.modes.volume_info(mode, self.config.reference)
        except QnmLabError as e:
            logger.error(f"crystallite-qnm failed for '{lattice.name}': {e}")
            raise

        written = [
            self.artifacts.write_csv(self.axis_table(mode), "field_xaxis.csv").name,
            self.artifacts.write_csv(self.plane_table(mode), "field_xy.csv").name,
        ]
        nu = mode.normalized_omega
        report = QnmReport(
            command="crystallite-qnm",
            structure=lattice.name,
            dimension=2,
            units=UNITS_2D,
            omega_re=nu.real,
            omega_im=nu.imag,
            q_factor=mode.omega.q_factor,
            helmholtz_residual=operator_residual(mode),
            mesh_cells=mode.mesh.size,
            near_degenerate=mode.near_degenerate,
            artifacts=[*written, "qnm.json"],
            **volume.model_dump(),
        )
        self.artifacts.write_json(report, "qnm.json", "qnm")
        return report
