import numpy as np
import pandas as pd

from src.app.core.exceptions import ConfigurationError, QnmLabError
from src.app.core.logging import get_logger
from src.app.schemas.common import UNITS_1D
from src.app.schemas.requests import RunConfig
from src.app.schemas.responses import QnmReport
from src.app.services.artifact_service import ArtifactService
from src.app.services.mode_service import ModeService
from src.qnm1d.field import Qnm1D
from src.structures.models import LayeredStack1D

logger = get_logger()


class SlabService:
    """slab-qnm: one QNM of a layered stack with its field profile."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.modes = ModeService(config.threads)
        self.artifacts = ArtifactService(config.out)

    @staticmethod
    def field_table(mode: Qnm1D) -> pd.DataFrame:
        """f on the stack plus half a stack length of cladding on each side."""
        interior = mode.grid
        spacing = interior[1] - interior[0]
        length = mode.stack.length
        x = np.arange(-length / 2, 1.5 * length + spacing / 2, spacing)
        f = mode.field_at(x)
        return pd.DataFrame({"x": x, "f_re": f.real, "f_im": f.imag, "f_abs": np.abs(f)})

    def run(self) -> QnmReport:
        stack = self.config.single_structure()
        if not isinstance(stack, LayeredStack1D):
            raise ConfigurationError(f"slab-qnm needs a layered stack, got '{stack.name}' ({stack.type})")

        try:
            mode = self.modes.solve_stack(stack, self.config.guess_complex)
            volume = self.modes.volume_info(mode, self.config.reference)
        except QnmLabError as e:
            logger.error(f"slab-qnm failed for '{stack.name}': {e}")
            raise

        field_path = self.artifacts.write_csv(self.field_table(mode), "field.csv")
        report = QnmReport(
            command="slab-qnm",
            structure=stack.name,
            dimension=1,
            units=UNITS_1D,
            omega_re=mode.omega.real,
            omega_im=mode.omega.imag,
            q_factor=mode.omega.q_factor,
            l_eff=volume.v_eff_q,
            helmholtz_residual=mode.helmholtz_residual(),
            artifacts=[field_path.name, "qnm.json"],
            **volume.model_dump(),
        )
        self.artifacts.write_json(report, "qnm.json", "qnm")
        return report
