from typing import Optional, Tuple, Union

import numpy as np

from src.app.core.config import settings
from src.app.core.logging import get_logger
from src.qnm1d.field import Qnm1D
from src.qnm2d.field import Qnm2D
from src.structures.lattice import inside_rods
from src.structures.permittivity import epsilon_at, epsilon_map

logger = get_logger()

TIE_TOLERANCE = 1e-9


def _argmax_nearest_origin(points: np.ndarray, values: np.ndarray) -> int:
    """Index of the maximum; near-ties go to the point closest to the origin."""
    peak = values.max()
    candidates = np.flatnonzero(values >= peak * (1 - TIE_TOLERANCE))
    radius = np.linalg.norm(points[candidates].reshape(candidates.size, -1), axis=1)
    return int(candidates[np.argmin(radius)])


def antinode_candidates(mode: Union[Qnm1D, Qnm2D], grid_points: Optional[int] = None) -> np.ndarray:
    """
    Sample points searched for the antinode: the interior grid of a stack, or
    the background points of a uniform grid over the central unit cell of a
    crystallite (rod interiors excluded).
    """
    if isinstance(mode, Qnm1D):
        return mode.grid
    grid_points = settings.ANTINODE_GRID_POINTS if grid_points is None else grid_points
    half = mode.lattice.a / 2
    axis = np.linspace(-half, half, grid_points)
    xx, yy = np.meshgrid(axis, axis, indexing="ij")
    grid = np.column_stack([xx.ravel(), yy.ravel()])
    return grid[~inside_rods(mode.lattice, grid)]


def find_antinode(mode: Union[Qnm1D, Qnm2D], spec=None, grid_points: Optional[int] = None) -> Tuple[object, float]:
    """
    r_c = argmax eps |f|^2 over the candidate points, n_c = sqrt(eps(r_c)).
    Uses |f|^2, so the result does not depend on the mode's scale or phase.
    """
    spec = (mode.stack if isinstance(mode, Qnm1D) else mode.lattice) if spec is None else spec
    points = antinode_candidates(mode, grid_points)
    values = mode.field_at(points)

    intensity = epsilon_map(spec, points) * np.abs(values) ** 2
    index = _argmax_nearest_origin(points, intensity)
    r_c = points[index]
    n_c = float(np.sqrt(epsilon_at(spec, r_c)))
    location = float(r_c) if np.ndim(r_c) == 0 else np.asarray(r_c)
    logger.debug(f"Antinode of '{spec.name}' at {np.ravel(r_c).tolist()} with n_c={n_c:.4g}")
    return location, n_c
