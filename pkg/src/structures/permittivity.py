from typing import Union

import numpy as np

from src.structures.lattice import inside_rods
from src.structures.models import LayeredStack1D, RodLattice2D


def epsilon_at(spec: Union[LayeredStack1D, RodLattice2D], point) -> float:
    """
    Relative permittivity at a single point.

    Rod boundaries belong to the background; 1D interfaces belong to the
    layer on the +x side.
    """
    return float(epsilon_map(spec, np.asarray(point, dtype=float)[None, ...])[0])


def epsilon_map(spec: Union[LayeredStack1D, RodLattice2D], points: np.ndarray) -> np.ndarray:
    """
    Vectorized epsilon_at: points has shape (n,) in 1D or (n, 2) in 2D.
    """
    points = np.asarray(points, dtype=float)
    if isinstance(spec, RodLattice2D):
        points = points.reshape(-1, 2)
        eps = np.full(points.shape[0], spec.eps_bg)
        if spec.is_homogeneous:
            return eps
        eps[inside_rods(spec, points)] = spec.eps_rod
        return eps

    x = points.reshape(-1)
    edges = spec.interfaces
    # index of the region: 0 is the left cladding, len(layers)+1 the right cladding
    region = np.searchsorted(edges, x, side="right")
    table = np.concatenate([[spec.eps_left], spec.permittivities, [spec.eps_right]])
    return table[region]
