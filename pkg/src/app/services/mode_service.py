from typing import Optional, Sequence, Union

import numpy as np

from src.app.core.exceptions import ConfigurationError, NoConvergenceError, NonPositiveVolumeError, NumericalError
from src.app.core.logging import get_logger
from src.app.schemas.common import ModeVolumeInfo
from src.modevol.antinode import find_antinode
from src.modevol.volumes import complex_mode_volume, effective_volume
from src.qnm1d.field import Qnm1D
from src.qnm1d.solver import find_qnm_1d, find_qnms_1d
from src.qnm2d.field import Qnm2D
from src.qnm2d.solver import find_qnm_2d
from src.structures.models import LayeredStack1D, RodLattice2D
from src.structures.permittivity import epsilon_at

logger = get_logger()


def optical_length(stack: LayeredStack1D) -> float:
    return float(sum(np.sqrt(layer.eps) * layer.thickness for layer in stack.layers))


class ModeService:
    """Solves for the mode a command works on and reports its volume."""

    def __init__(self, threads: Optional[int] = None):
        self.threads = threads

    def solve_stack(self, stack: LayeredStack1D, guess: Optional[complex] = None) -> Qnm1D:
        """
        QNM of a stack from an angular guess; without one, the lowest
        Fabry-Perot order found around pi c / (optical length).
        """
        if guess is not None:
            return find_qnm_1d(stack, guess)
        if not stack.layers:
            raise ConfigurationError(f"stack '{stack.name}' has no layers")

        center = np.pi / optical_length(stack)
        modes = find_qnms_1d(stack, 0.5 * center, 1.5 * center, threads=self.threads)
        if not modes:
            raise NoConvergenceError(f"no quasinormal mode of '{stack.name}' near omega={center:.6g}",
                                     complex(center), float("nan"))
        return min(modes, key=lambda m: abs(m.omega.real - center))

    def solve_crystallite(
        self,
        lattice: RodLattice2D,
        guess: Optional[complex] = None,
        resolution: Optional[int] = None,
    ) -> Qnm2D:
        """QNM of a crystallite. The guess is in omega a / 2 pi c, as reported."""
        omega_guess = None if guess is None else 2 * np.pi * guess
        return find_qnm_2d(lattice, omega_guess, resolution=resolution, threads=self.threads)

    def solve(
        self,
        structure: Union[LayeredStack1D, RodLattice2D],
        guess: Optional[complex] = None,
        resolution: Optional[int] = None,
    ) -> Union[Qnm1D, Qnm2D]:
        if isinstance(structure, RodLattice2D):
            return self.solve_crystallite(structure, guess, resolution)
        return self.solve_stack(structure, guess)

    def reference_point(self, mode: Union[Qnm1D, Qnm2D], reference: Optional[Sequence[float]] = None):
        """(r_c, n_c): the configured reference point, or the antinode."""
        spec = mode.stack if isinstance(mode, Qnm1D) else mode.lattice
        if reference is None:
            return find_antinode(mode, spec)
        expected = 1 if isinstance(mode, Qnm1D) else 2
        if len(reference) != expected:
            raise ConfigurationError(f"reference point needs {expected} coordinate(s), got {list(reference)}")
        r_c = float(reference[0]) if expected == 1 else np.asarray(reference, dtype=float)
        return r_c, float(np.sqrt(epsilon_at(spec, r_c)))

    def volume_info(self, mode: Union[Qnm1D, Qnm2D], reference: Optional[Sequence[float]] = None) -> ModeVolumeInfo:
        """v_Q and V_eff^Q at r_c; V_eff^Q is left empty when Re v_Q <= 0."""
        try:
            r_c, n_c = self.reference_point(mode, reference)
            v_q = complex_mode_volume(mode, r_c)
        except NumericalError as e:
            logger.error(f"Mode volume evaluation failed: {e}")
            raise

        v_eff = reduced = None
        try:
            v_eff = effective_volume(v_q, n_c)
            dimension = 1 if isinstance(mode, Qnm1D) else 2
            reduced = v_eff / (2 * np.pi / (mode.omega.real * n_c)) ** dimension
        except NonPositiveVolumeError as e:
            logger.warning(f"V_eff^Q undefined at r_c={np.ravel(r_c).tolist()}: {e}")

        return ModeVolumeInfo(
            antinode=np.ravel(r_c).tolist(),
            n_c=n_c,
            v_q_re=v_q.real,
            v_q_im=v_q.imag,
            v_eff_q=v_eff,
            v_eff_q_reduced=reduced,
        )
