import numpy as np
import pandas as pd

from src.app.core.config import settings
from src.app.core.exceptions import QnmLabError
from src.app.core.logging import get_logger
from src.app.schemas.common import UNITS_1D, UNITS_2D
from src.app.schemas.requests import RunConfig
from src.app.schemas.responses import LdosReport
from src.app.services.artifact_service import ArtifactService
from src.app.services.mode_service import ModeService
from src.greens.ldos import LdosSpectrum, check_probe, ldos_spectrum, spectrum_frequencies
from src.qnm2d.mesh import build_scatterer_mesh
from src.structures.models import RodLattice2D

logger = get_logger()


class LdosService:
    """
    ldos: full and single-mode LDOS enhancement at a probe over a real
    frequency window around the mode. Structures without a mode (the
    homogeneous reference) are scanned over the seed window with F_single
    left as NaN.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.modes = ModeService(config.threads)
        self.artifacts = ArtifactService(config.out)

    def run(self) -> LdosReport:
        structure = self.config.single_structure()
        is_2d = isinstance(structure, RodLattice2D)
        probe = check_probe(structure, self.config.probe) if is_2d else np.array(self.config.probe[0])
        points = settings.SPECTRUM_POINTS if self.config.spectrum_points is None else self.config.spectrum_points

        try:
            mode = None
            mesh = build_scatterer_mesh(structure, self.config.resolution) if is_2d else None
            if is_2d and structure.is_homogeneous:
                frequencies = 2 * np.pi * np.linspace(settings.SEED_SCAN_MIN, settings.SEED_SCAN_MAX, points)
            else:
                mode = self.modes.solve(structure, self.config.guess_complex, self.config.resolution)
                mesh = mode.mesh if is_2d else None
                frequencies = spectrum_frequencies(mode.omega, points, self.config.spectrum_half_width)
            spectrum: LdosSpectrum = ldos_spectrum(
                structure, probe, frequencies, mesh=mesh, mode=mode, threads=self.config.threads
            )
        except QnmLabError as e:
            logger.error(f"ldos failed for '{structure.name}': {e}")
            raise

        scale = 1 / (2 * np.pi) if is_2d else 1.0
        table = pd.DataFrame({
            "omega": spectrum.frequencies * scale,
            "F_full": spectrum.enhancement_full,
            "F_single": spectrum.enhancement_single,
        })
        csv_path = self.artifacts.write_csv(table, "ldos.csv")

        mode_omega = None if mode is None else mode.omega.omega * scale
        report = LdosReport(
            command="ldos",
            structure=structure.name,
            dimension=2 if is_2d else 1,
            units=UNITS_2D if is_2d else UNITS_1D,
            probe=np.ravel(probe).tolist(),
            points=int(spectrum.frequencies.size),
            omega_min=float(table["omega"].iloc[0]),
            omega_max=float(table["omega"].iloc[-1]),
            peak_omega=spectrum.peak_frequency * scale,
            peak_enhancement=float(np.max(spectrum.enhancement_full)),
            fwhm=spectrum.full_width_half_maximum() * scale,
            mode_omega_re=None if mode_omega is None else mode_omega.real,
            mode_omega_im=None if mode_omega is None else mode_omega.imag,
            artifacts=[csv_path.name, "ldos.json"],
        )
        self.artifacts.write_json(report, "ldos.json", "ldos")
        return report
