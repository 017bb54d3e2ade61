from typing import List, Optional

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import NoConvergenceError, NumericalError
from src.app.core.logging import get_logger
from src.app.core.utils import parallel_map
from src.numerics.frequency import ComplexFrequency
from src.numerics.roots import central_difference, find_root_complex
from src.qnm1d.field import Qnm1D
from src.qnm1d.inner_product import normalize_qnm_1d
from src.qnm1d.transfer import qnm_condition_1d
from src.structures.models import LayeredStack1D

logger = get_logger()


def _has_contrast(stack: LayeredStack1D) -> bool:
    eps = {stack.eps_left, stack.eps_right, *(layer.eps for layer in stack.layers)}
    return len(eps) > 1


def find_qnm_1d(
    stack: LayeredStack1D,
    omega_guess: complex,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
) -> Qnm1D:
    """
    Newton search for a zero of qnm_condition_1d from omega_guess, returning
    the normalized mode.
    """
    tol = settings.ROOT_TOL_1D if tol is None else tol
    max_iter = settings.ROOT_MAX_ITER if max_iter is None else max_iter

    if not _has_contrast(stack):
        raise NoConvergenceError(
            "homogeneous stack has no quasinormal modes",
            complex(omega_guess),
            abs(qnm_condition_1d(stack, omega_guess)),
        )

    try:
        root = find_root_complex(lambda w: qnm_condition_1d(stack, w), omega_guess, tol=tol, max_iter=max_iter)
        omega = ComplexFrequency.accepted(root)
    except NumericalError as e:
        logger.error(f"1D QNM search from {complex(omega_guess):.6g} failed for '{stack.name}': {e}")
        raise

    mode = normalize_qnm_1d(Qnm1D.from_frequency(stack, omega))
    logger.info(f"1D QNM of '{stack.name}': omega={omega.omega:.10g}, Q={omega.q_factor:.4g}")
    return mode


def seed_qnm_1d(
    stack: LayeredStack1D,
    omega_min: float,
    omega_max: float,
    points: Optional[int] = None,
) -> List[complex]:
    """
    Initial guesses from local minima of |qnm_condition_1d| on a real
    frequency grid, each pushed into the lower half plane by one Newton step
    estimate of the distance to the pole.
    """
    points = settings.SEED_SCAN_POINTS_1D if points is None else points
    if not 0 < omega_min < omega_max:
        raise ValueError(f"invalid scan window [{omega_min}, {omega_max}]")

    grid = np.linspace(omega_min, omega_max, points)
    residual = np.array([abs(qnm_condition_1d(stack, w)) for w in grid])
    interior = np.flatnonzero((residual[1:-1] < residual[:-2]) & (residual[1:-1] <= residual[2:])) + 1

    guesses = []
    for i in interior:
        w = grid[i]
        slope = abs(central_difference(lambda z: qnm_condition_1d(stack, z), w))
        depth = residual[i] / slope if slope > 0 else 0.1 * w
        guesses.append(complex(w, -depth))
    logger.debug(f"Seeded {len(guesses)} guesses for '{stack.name}' in [{omega_min}, {omega_max}]")
    return guesses


def find_qnms_1d(
    stack: LayeredStack1D,
    omega_min: float,
    omega_max: float,
    points: Optional[int] = None,
    threads: Optional[int] = None,
) -> List[Qnm1D]:
    """All distinct QNMs whose real frequency lies in the window, sorted by Re omega."""

    def attempt(guess: complex) -> Optional[Qnm1D]:
        try:
            return find_qnm_1d(stack, guess)
        except NumericalError as e:
            logger.warning(f"Discarding seed {guess:.6g}: {e}")
            return None

    modes: List[Qnm1D] = []
    for mode in parallel_map(attempt, seed_qnm_1d(stack, omega_min, omega_max, points), threads):
        if mode is None or not omega_min <= mode.omega.real <= omega_max:
            continue
        if any(abs(mode.omega.omega - other.omega.omega) < 1e-6 * abs(mode.omega.omega) for other in modes):
            continue
        modes.append(mode)
    return sorted(modes, key=lambda m: m.omega.real)
