from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from src.app.core.config import settings
from src.app.core.logging import get_logger
from src.structures.models import RodLattice2D

logger = get_logger()


@dataclass(frozen=True, eq=False)
class ScattererMesh:
    """
    Collocation cells covering the rods: square pixels of side
    2R/resolution aligned to every rod center and clipped to the disk.
    Centers are the centroids of the clipped pixels.
    """
    centers: np.ndarray
    areas: np.ndarray
    rod_index: np.ndarray
    resolution: int

    @property
    def size(self) -> int:
        return self.areas.size

    @property
    def equivalent_radii(self) -> np.ndarray:
        """Radius of the disk with the same area as each cell."""
        return np.sqrt(self.areas / np.pi)

    @property
    def pixel_size(self) -> float:
        return float(np.sqrt(self.areas.max()))

    def rod_areas(self) -> np.ndarray:
        return np.bincount(self.rod_index, weights=self.areas)

    def mirror_index(self, tol: float = 1e-9) -> np.ndarray:
        """Index of the cell at (-x, y) for every cell; -1 where none exists."""
        reflected = self.centers * np.array([-1.0, 1.0])
        distance, index = cKDTree(self.centers).query(reflected)
        return np.where(distance < tol, index, -1)


def _reference_cells(radius: float, resolution: int, subsamples: int):
    """Clipped pixels of one disk centered at the origin: (centroids, areas)."""
    h = 2 * radius / resolution
    offsets = (np.arange(resolution) + 0.5) * h - radius
    sub = (np.arange(subsamples) + 0.5) / subsamples * h - h / 2

    centroids, areas = [], []
    for cx in offsets:
        for cy in offsets:
            px, py = np.meshgrid(cx + sub, cy + sub, indexing="ij")
            inside = np.hypot(px, py) < radius
            count = np.count_nonzero(inside)
            if count == 0:
                continue
            centroids.append((px[inside].mean(), py[inside].mean()))
            areas.append(count / subsamples ** 2 * h ** 2)

    areas = np.asarray(areas)
    # subsampled areas are rescaled so the cells of one rod tile exactly pi R^2
    areas *= np.pi * radius ** 2 / areas.sum()
    return np.asarray(centroids), areas


@lru_cache(maxsize=8)
def build_scatterer_mesh(
    lattice: RodLattice2D,
    resolution: Optional[int] = None,
    subsamples: Optional[int] = None,
) -> ScattererMesh:
    resolution = settings.MESH_RESOLUTION if resolution is None else resolution
    subsamples = settings.MESH_SUBSAMPLES if subsamples is None else subsamples
    if resolution < 1 or subsamples < 1:
        raise ValueError("mesh resolution and subsamples must be positive")

    local, areas = _reference_cells(lattice.rod_radius, resolution, subsamples)
    rods = lattice.rod_centers
    centers = (rods[:, None, :] + local[None, :, :]).reshape(-1, 2)
    cell_areas = np.tile(areas, rods.shape[0])
    rod_index = np.repeat(np.arange(rods.shape[0]), local.shape[0])
    for array in (centers, cell_areas, rod_index):
        array.flags.writeable = False
    mesh = ScattererMesh(
        centers=centers,
        areas=cell_areas,
        rod_index=rod_index,
        resolution=resolution,
    )
    logger.debug(f"Meshed {rods.shape[0]} rods of '{lattice.name}' into {mesh.size} cells "
                 f"(resolution {resolution})")
    return mesh
