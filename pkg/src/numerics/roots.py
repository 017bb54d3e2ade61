from typing import Callable

import numpy as np

from src.app.core.exceptions import NoConvergenceError
from src.app.core.logging import get_logger

logger = get_logger()


def central_difference(f: Callable[[complex], complex], z: complex) -> complex:
    h = 1e-7 * max(1.0, abs(z))
    return (f(z + h) - f(z - h)) / (2 * h)


def find_root_complex(
    f: Callable[[complex], complex],
    z0: complex,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> complex:
    """
    Newton iteration with a central-difference derivative.

    Returns z with |f(z)| <= tol reached within max_iter Newton steps, or
    raises NoConvergenceError carrying the last iterate and its residual.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")

    z = complex(z0)
    fz = complex(f(z))
    for iteration in range(max_iter):
        if abs(fz) <= tol:
            logger.debug(f"Newton converged after {iteration} steps at {z:.12g}")
            return z
        if not np.isfinite(fz):
            raise NoConvergenceError("residual is not finite", z, float("inf"), iteration)

        derivative = central_difference(f, z)
        if derivative == 0 or not np.isfinite(derivative):
            raise NoConvergenceError("derivative vanished", z, abs(fz), iteration)

        z = z - fz / derivative
        fz = complex(f(z))
        logger.debug(f"Newton step {iteration + 1}: z={z:.12g} |f|={abs(fz):.3e}")

    if abs(fz) <= tol:
        return z
    raise NoConvergenceError("Newton iteration did not converge", z, abs(fz), max_iter)
