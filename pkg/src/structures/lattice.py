import numpy as np

from src.app.core.exceptions import InvalidGeometryError
from src.structures.models import RodLattice2D


def build_hexagonal_crystallite(
    N: int, a: float, R: float, eps_rod: float, eps_bg: float = 1.0, name: str = "crystallite"
) -> RodLattice2D:
    """
    Triangular-lattice crystallite of N complete hexagonal rings of rods
    around a missing central rod (3N(N+1) rods).
    """
    if a <= 2 * R:
        raise InvalidGeometryError(f"rods overlap: a={a} must exceed 2R={2 * R}")
    if R <= 0 or N < 1:
        raise InvalidGeometryError(f"invalid crystallite parameters N={N}, R={R}")
    return RodLattice2D(name=name, a=a, rod_radius=R, eps_rod=eps_rod, eps_bg=eps_bg, layers=N)


def rod_index_at(lattice: RodLattice2D, point) -> int:
    """
    Index of the rod strictly containing the point, -1 in the background.
    """
    d = np.hypot(*(lattice.rod_centers - np.asarray(point, dtype=float)).T)
    inside = np.flatnonzero(d < lattice.rod_radius)
    return int(inside[0]) if inside.size else -1


def inside_rods(lattice: RodLattice2D, points) -> np.ndarray:
    """Boolean mask over points of shape (n, 2): True strictly inside any rod."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    diff = points[:, None, :] - lattice.rod_centers[None, :, :]
    return np.any(np.hypot(diff[..., 0], diff[..., 1]) < lattice.rod_radius, axis=1)
