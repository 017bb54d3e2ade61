from dataclasses import dataclass, replace

import numpy as np

from src.numerics.frequency import ComplexFrequency
from src.qnm2d.mesh import ScattererMesh
from src.qnm2d.operator import background_wavenumber, cell_kernel, chunked
from src.structures.models import RodLattice2D


@dataclass(frozen=True, eq=False)
class Qnm2D:
    """
    TM quasinormal mode of a rod lattice, stored as its values on the
    scatterer cells. Everywhere else the field follows from the
    Lippmann-Schwinger representation over those values.
    """
    lattice: RodLattice2D
    mesh: ScattererMesh
    omega: ComplexFrequency
    interior_values: np.ndarray
    norm: complex = 1.0
    norm_radius: float = 0.0
    eigenvalue: complex = 1.0
    near_degenerate: bool = False

    @property
    def normalized_omega(self) -> complex:
        return self.omega.normalized

    @property
    def k_background(self) -> complex:
        return background_wavenumber(self.lattice, self.omega.omega)

    @property
    def sources(self) -> np.ndarray:
        """k0^2 delta_eps a_j u_j: source strength carried by each cell."""
        return self.omega.omega ** 2 * self.lattice.delta_eps * self.mesh.areas * self.interior_values

    def field_at(self, points) -> np.ndarray:
        return evaluate_qnm_field(self, points)

    def scaled(self, alpha: complex) -> "Qnm2D":
        return replace(self, interior_values=self.interior_values * alpha, norm=self.norm * alpha ** 2)


def evaluate_qnm_field(mode: Qnm2D, points) -> np.ndarray:
    """
    f(r) = k0^2 sum_j <g(r - s)>_j delta_eps a_j u_j at arbitrary points,
    inside or outside the rods. At cell centers this reproduces A u.
    """
    points = np.asarray(points, dtype=float)
    shape = points.shape[:-1]
    points = points.reshape(-1, 2)

    sources = mode.sources
    k = mode.k_background
    values = np.empty(points.shape[0], dtype=complex)
    for start, stop in chunked(points):
        values[start:stop] = cell_kernel(points[start:stop], mode.mesh, k) @ sources
    return values.reshape(shape)
