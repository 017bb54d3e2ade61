from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.app.core.exceptions import NumericalError
from src.app.core.logging import get_logger
from src.modevol.antinode import find_antinode
from src.modevol.purcell import ldos_factors, purcell_factor_2d_single_mode
from src.modevol.sweep import convergence_sweep
from src.modevol.volumes import quasinormal_mode_volume
from src.qnm1d.field import Qnm1D
from src.qnm1d.mode_length import mode_length_1d
from src.qnm2d.field import Qnm2D
from src.structures.lattice import rod_index_at
from src.structures.permittivity import epsilon_at

logger = get_logger()


@dataclass(frozen=True, eq=False)
class ModeVolumeReport:
    """
    Mode volumes of one converged mode. Volumes are in units of a^2 (2D) or
    of length (1D); V_eff_Q_reduced is V_eff_Q in units of (lambda_c/n_c)^d.
    """
    antinode: object
    n_c: float
    omega: complex
    q_factor: float
    v_q: complex
    V_eff_Q: float
    V_eff_Q_reduced: float
    sweep: pd.DataFrame
    V_eff_tot: float = float("nan")
    purcell_single: float = float("nan")
    purcell_full: float = float("nan")
    purcell_estimate: float = float("nan")

    @property
    def wavelength(self) -> float:
        """Vacuum wavelength 2 pi c / Re w in structure units."""
        return 2 * np.pi / self.omega.real


def mode_volume_report(
    mode: Union[Qnm1D, Qnm2D],
    spec=None,
    radii: Optional[Sequence[float]] = None,
    r_c=None,
    compute_ldos: bool = True,
    grid_points: Optional[int] = None,
    threads: Optional[int] = None,
) -> ModeVolumeReport:
    """
    Antinode, v_Q, V_eff^Q, the V_eff^N / V_eff^Q sweep and, optionally, the
    LDOS-derived V_eff^tot with both Purcell enhancements.
    """
    is_2d = isinstance(mode, Qnm2D)
    spec = (mode.lattice if is_2d else mode.stack) if spec is None else spec
    if r_c is None:
        r_c, n_c = find_antinode(mode, spec, grid_points)
    else:
        n_c = float(np.sqrt(epsilon_at(spec, r_c)))

    if is_2d:
        v_q, v_eff = quasinormal_mode_volume(mode, r_c, n_c)
    else:
        v_q, v_eff = mode_length_1d(mode, float(r_c))

    dimension = 2 if is_2d else 1
    wavelength = 2 * np.pi / mode.omega.real
    reduced = v_eff / (wavelength / n_c) ** dimension

    sweep = convergence_sweep(mode, spec, radii, r_c=r_c, threads=threads)

    extras = {}
    if compute_ldos and is_2d and rod_index_at(spec, r_c) >= 0:
        logger.warning(f"Antinode {np.ravel(r_c).tolist()} lies inside a rod; LDOS comparison skipped")
        compute_ldos = False
    if compute_ldos:
        try:
            single, full = ldos_factors(mode, r_c)
            extras = dict(V_eff_tot=v_eff * single / full, purcell_single=single, purcell_full=full)
        except NumericalError as e:
            logger.error(f"LDOS comparison failed: {e}")
            raise
    if is_2d:
        extras["purcell_estimate"] = purcell_factor_2d_single_mode(mode.omega.q_factor, mode.omega.real, n_c, v_eff)

    logger.info(f"Mode volume report for '{spec.name}': v_Q={v_q:.6g}, V_eff^Q={v_eff:.6g}")
    return ModeVolumeReport(
        antinode=r_c,
        n_c=n_c,
        omega=mode.omega.omega,
        q_factor=mode.omega.q_factor,
        v_q=v_q,
        V_eff_Q=v_eff,
        V_eff_Q_reduced=reduced,
        sweep=sweep,
        **extras,
    )
