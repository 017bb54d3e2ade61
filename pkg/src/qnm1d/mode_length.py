from typing import Tuple

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import ModeNodeError, NonPositiveVolumeError
from src.qnm1d.field import Qnm1D
from src.qnm1d.inner_product import qnm_inner_product_1d
from src.structures.permittivity import epsilon_at


def field_squared_at(mode: Qnm1D, x_c: float) -> complex:
    """f(x_c)**2, guarded against reference points on a node of the mode."""
    value = complex(mode.field_at(x_c))
    peak = float(np.max(np.abs(mode.samples) ** 2))
    if abs(value) ** 2 < settings.NODE_GUARD * peak:
        raise ModeNodeError(f"x_c={x_c} sits on a node: |f|^2={abs(value) ** 2:.3e}, max |f|^2={peak:.3e}")
    return value ** 2


def mode_length_1d(mode: Qnm1D, x_c: float) -> Tuple[complex, float]:
    """
    Complex mode length v_Q = <<f|f>> / f(x_c)**2 and the effective length
    L_eff = |v_Q|**2 / (n_c**2 Re v_Q).
    """
    v_q = qnm_inner_product_1d(mode, mode) / field_squared_at(mode, x_c)
    if v_q.real <= 0:
        raise NonPositiveVolumeError(f"Re v_Q = {v_q.real:.3e} at x_c={x_c}")
    n_c_squared = epsilon_at(mode.stack, x_c)
    return v_q, abs(v_q) ** 2 / (n_c_squared * v_q.real)
