from typing import Union

import numpy as np

from src.qnm1d.field import Qnm1D
from src.qnm2d.field import Qnm2D
from src.structures.permittivity import epsilon_at


def greens_single_mode(mode: Union[Qnm1D, Qnm2D], r, r_prime, omega: float) -> complex:
    """
    One-term QNM expansion f(r) f(r') / (2 w (w - omega)) of a normalized
    mode with complex frequency w. Regular for real omega since Im w < 0.
    """
    w = mode.omega.omega
    f_r = complex(np.ravel(mode.field_at(np.asarray(r, dtype=float)))[0])
    f_rp = f_r if np.array_equal(r, r_prime) else complex(np.ravel(mode.field_at(np.asarray(r_prime, dtype=float)))[0])
    return f_r * f_rp / (2 * w * (w - omega))


def single_mode_ldos(mode: Union[Qnm1D, Qnm2D], probe, omega: float) -> float:
    """
    LDOS enhancement predicted by the single-mode Green's function, relative
    to the homogeneous medium at the probe: Im g_B = 1/4 in 2D and
    1/(2 omega n) in 1D.
    """
    value = greens_single_mode(mode, probe, probe, omega).imag
    if isinstance(mode, Qnm2D):
        return 4.0 * value
    n = np.sqrt(epsilon_at(mode.stack, probe))
    return 2.0 * omega * n * value
