from typing import Optional, Tuple, Union

import numpy as np

from src.app.core.exceptions import ConfigurationError
from src.app.core.logging import get_logger
from src.greens.ldos import ldos_enhancement, ldos_enhancement_1d
from src.greens.single_mode import single_mode_ldos
from src.modevol.volumes import quasinormal_mode_volume
from src.qnm1d.field import Qnm1D
from src.qnm1d.mode_length import mode_length_1d
from src.qnm2d.field import Qnm2D
from src.qnm2d.mesh import ScattererMesh
from src.structures.models import RodLattice2D
from src.structures.permittivity import epsilon_at

logger = get_logger()


def purcell_factor(lambda_c: float, n_c: float, Q: float, V_eff: float) -> float:
    """F_P = (3 / 4 pi^2) (lambda_c / n_c)^3 Q / V_eff."""
    if min(lambda_c, n_c, Q, V_eff) <= 0:
        raise ConfigurationError("Purcell factor inputs must all be positive")
    return 3 / (4 * np.pi ** 2) * (lambda_c / n_c) ** 3 * Q / V_eff


def purcell_factor_2d_single_mode(q: float, omega_r: float, n_c: float, v_eff: float) -> float:
    """
    LDOS enhancement of a 2D TM emitter at the antinode of a high-Q mode,
    4 Q / (omega_R^2 n_c^2 V) with c = 1; reported next to the LDOS ratios.
    """
    if min(q, omega_r, n_c, v_eff) <= 0:
        raise ConfigurationError("Purcell factor inputs must all be positive")
    return 4 * q / (omega_r ** 2 * n_c ** 2 * v_eff)


def ldos_factors(mode: Union[Qnm1D, Qnm2D], probe, mesh: Optional[ScattererMesh] = None) -> Tuple[float, float]:
    """(F_single, F_full) at the probe and the real part of the mode frequency."""
    omega_r = mode.omega.real
    single = single_mode_ldos(mode, probe, omega_r)
    if isinstance(mode, Qnm2D):
        full = ldos_enhancement(mode.lattice, probe, omega_r, mesh if mesh is not None else mode.mesh)
    else:
        full = ldos_enhancement_1d(mode.stack, float(probe), omega_r)
    logger.info(f"LDOS at resonance: single-mode {single:.6g}, full {full:.6g}")
    return single, full


def effective_volume_from_ldos(
    mode: Qnm2D,
    lattice: Optional[RodLattice2D] = None,
    probe=None,
    mesh: Optional[ScattererMesh] = None,
) -> float:
    """
    V_tot = V_Q F_single / F_full: the volume that makes the single-mode
    Purcell estimate reproduce the full LDOS enhancement at Re w.
    """
    lattice = mode.lattice if lattice is None else lattice
    probe = np.zeros(2) if probe is None else np.asarray(probe, dtype=float)
    n_c = float(np.sqrt(epsilon_at(lattice, probe)))
    _, v_eff = quasinormal_mode_volume(mode, probe, n_c)
    single, full = ldos_factors(mode, probe, mesh)
    return v_eff * single / full


def effective_length_from_ldos(mode: Qnm1D, x_c: float) -> float:
    """1D counterpart of effective_volume_from_ldos."""
    _, l_eff = mode_length_1d(mode, x_c)
    single, full = ldos_factors(mode, x_c)
    return l_eff * single / full
