from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import ProbeLocationError
from src.app.core.logging import get_logger
from src.app.core.utils import parallel_map
from src.greens.full import FullGreensSolver, greens_full_1d
from src.greens.single_mode import single_mode_ldos
from src.numerics.frequency import ComplexFrequency
from src.qnm1d.field import Qnm1D
from src.qnm2d.field import Qnm2D
from src.qnm2d.mesh import ScattererMesh, build_scatterer_mesh
from src.structures.lattice import rod_index_at
from src.structures.models import LayeredStack1D, RodLattice2D
from src.structures.permittivity import epsilon_at

logger = get_logger()


@dataclass(frozen=True, eq=False)
class LdosSpectrum:
    """
    LDOS enhancement against real angular frequency at one probe point.
    enhancement_single is NaN where no mode is available.
    """
    probe: np.ndarray
    frequencies: np.ndarray
    enhancement_full: np.ndarray
    enhancement_single: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.enhancement_single is None:
            object.__setattr__(self, "enhancement_single", np.full(self.frequencies.shape, np.nan))
        if not (self.frequencies.shape == self.enhancement_full.shape == self.enhancement_single.shape):
            raise ValueError("spectrum columns must share the frequency grid")

    @property
    def peak_frequency(self) -> float:
        return float(self.frequencies[int(np.argmax(self.enhancement_full))])

    def full_width_half_maximum(self) -> float:
        """Width of the region around the peak where F_full exceeds half its maximum."""
        values = self.enhancement_full
        peak = int(np.argmax(values))
        half = values[peak] / 2
        lo = peak
        while lo > 0 and values[lo - 1] > half:
            lo -= 1
        hi = peak
        while hi < values.size - 1 and values[hi + 1] > half:
            hi += 1

        def crossing(i_in: int, i_out: int) -> float:
            if i_out == i_in:
                return float(self.frequencies[i_in])
            t = (values[i_in] - half) / (values[i_in] - values[i_out])
            return float(self.frequencies[i_in] + t * (self.frequencies[i_out] - self.frequencies[i_in]))

        return crossing(hi, min(hi + 1, values.size - 1)) - crossing(lo, max(lo - 1, 0))


def check_probe(lattice: RodLattice2D, probe) -> np.ndarray:
    probe = np.asarray(probe, dtype=float)
    if probe.shape != (2,):
        raise ProbeLocationError(f"probe must be a 2D point, got {probe.tolist()}")
    if not lattice.is_homogeneous and rod_index_at(lattice, probe) >= 0:
        raise ProbeLocationError(f"probe {probe.tolist()} lies inside a rod; emitters must sit in the background")
    return probe


def ldos_enhancement(
    lattice: RodLattice2D,
    probe,
    omega: float,
    mesh: Optional[ScattererMesh] = None,
) -> float:
    """Im G(r, r, omega) / Im g_B(r, r, omega) for an out-of-plane dipole at the probe."""
    probe = check_probe(lattice, probe)
    return FullGreensSolver(lattice, omega, mesh).ldos(probe)


def ldos_enhancement_1d(stack: LayeredStack1D, x: float, omega: float) -> float:
    """Im G(x, x) relative to the homogeneous value 1/(2 omega n(x))."""
    n = np.sqrt(epsilon_at(stack, x))
    return float(greens_full_1d(stack, x, x, omega).imag * 2 * omega * n)


def spectrum_frequencies(
    omega: ComplexFrequency,
    points: Optional[int] = None,
    half_width: Optional[float] = None,
) -> np.ndarray:
    """Real grid over Re w -+ half_width |Im w|."""
    points = settings.SPECTRUM_POINTS if points is None else points
    half_width = settings.SPECTRUM_HALF_WIDTH if half_width is None else half_width
    span = half_width * abs(omega.imag)
    return np.linspace(omega.real - span, omega.real + span, points)


def ldos_spectrum(
    structure: Union[RodLattice2D, LayeredStack1D],
    probe,
    frequencies: Sequence[float],
    mesh: Optional[ScattererMesh] = None,
    mode: Union[Qnm1D, Qnm2D, None] = None,
    threads: Optional[int] = None,
) -> LdosSpectrum:
    """
    Full and single-mode LDOS enhancement over a real frequency grid. Each
    frequency owns its factorization; points are evaluated in parallel.
    """
    frequencies = np.asarray(frequencies, dtype=float)

    if isinstance(structure, RodLattice2D):
        probe = check_probe(structure, probe)
        mesh = build_scatterer_mesh(structure) if mesh is None else mesh

        def full(omega: float) -> float:
            return FullGreensSolver(structure, omega, mesh).ldos(probe)
    else:
        probe = np.asarray(float(np.ravel(probe)[0]))

        def full(omega: float) -> float:
            return ldos_enhancement_1d(structure, float(probe), omega)

    logger.info(f"LDOS spectrum of '{structure.name}' at {np.ravel(probe).tolist()}: {frequencies.size} points")
    enhancement_full = np.array(parallel_map(full, frequencies, threads))
    enhancement_single = None
    if mode is not None:
        enhancement_single = np.array([single_mode_ldos(mode, probe, w) for w in frequencies])
    return LdosSpectrum(
        probe=probe,
        frequencies=frequencies,
        enhancement_full=enhancement_full,
        enhancement_single=enhancement_single,
    )
