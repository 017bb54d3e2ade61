from typing import List

import numpy as np

from src.app.core.exceptions import QnmLabError
from src.app.core.logging import get_logger
from src.app.schemas.common import UNITS_1D, UNITS_2D
from src.app.schemas.requests import RunConfig
from src.app.schemas.responses import SweepSummary
from src.app.services.artifact_service import ArtifactService
from src.app.services.mode_service import ModeService
from src.modevol.report import ModeVolumeReport, mode_volume_report
from src.structures.models import RodLattice2D

logger = get_logger()


def _optional(value: float):
    return None if value is None or not np.isfinite(value) else float(value)


class ModeVolumeService:
    """
    mode-volume-sweep: V_eff^N and V_eff^Q against domain size, one output
    directory per structure when several presets are batched.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.modes = ModeService(config.threads)

    def sweep_one(self, name: str, structure, artifacts: ArtifactService) -> SweepSummary:
        try:
            mode = self.modes.solve(structure, self.config.guess_complex, self.config.resolution)
            r_c = None
            if self.config.reference is not None:
                r_c, _ = self.modes.reference_point(mode, self.config.reference)
            report: ModeVolumeReport = mode_volume_report(
                mode,
                structure,
                radii=self.config.radii,
                r_c=r_c,
                compute_ldos=self.config.compute_ldos,
                threads=self.config.threads,
            )
        except QnmLabError as e:
            logger.error(f"mode-volume-sweep failed for '{name}': {e}")
            raise

        sweep_path = artifacts.write_csv(report.sweep, "sweep.csv")
        is_2d = isinstance(structure, RodLattice2D)
        omega = complex(report.omega) / (2 * np.pi) if is_2d else complex(report.omega)
        summary = SweepSummary(
            command="mode-volume-sweep",
            structure=name,
            dimension=2 if is_2d else 1,
            units=UNITS_2D if is_2d else UNITS_1D,
            omega_re=omega.real,
            omega_im=omega.imag,
            q_factor=report.q_factor,
            antinode=np.ravel(report.antinode).tolist(),
            n_c=report.n_c,
            v_q_re=report.v_q.real,
            v_q_im=report.v_q.imag,
            v_eff_q=_optional(report.V_eff_Q),
            v_eff_q_reduced=_optional(report.V_eff_Q_reduced),
            radii=report.sweep["radius"].tolist(),
            v_eff_tot=_optional(report.V_eff_tot),
            purcell_single=_optional(report.purcell_single),
            purcell_full=_optional(report.purcell_full),
            purcell_estimate=_optional(report.purcell_estimate),
            artifacts=[sweep_path.name, "summary.json"],
        )
        artifacts.write_json(summary, "summary.json", "summary")
        return summary

    def run(self) -> List[SweepSummary]:
        entries = self.config.structures()
        summaries = []
        for name, structure in entries:
            out_dir = self.config.out if len(entries) == 1 else self.config.out / name
            logger.info(f"Sweeping '{name}' into {out_dir}")
            summaries.append(self.sweep_one(name, structure, ArtifactService(out_dir)))
        return summaries
