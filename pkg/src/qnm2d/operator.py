"""
Discretized Lippmann-Schwinger operator for 2D TM fields.

With g(r) = (i/4) H0(k_B |r|) and cells s_j of area a_j, the field inside the
rods obeys u_i = sum_j A_ij u_j with A_ij = k0^2 g(s_i - s_j) delta_eps a_j.
Every cell is treated as a uniform disk of equal area for the singular
self term, which has the closed form

    int_disk g dA = (i pi a_eq / 2k) H1(k a_eq) - 1/k^2.
"""
import numpy as np
from scipy.spatial.distance import cdist

from src.app.core.config import settings
from src.numerics.special import bessel_j0, hankel0_first_kind, hankel1_first_kind
from src.qnm2d.mesh import ScattererMesh
from src.structures.models import RodLattice2D

ROW_BLOCK = 1024


def background_wavenumber(lattice: RodLattice2D, omega: complex) -> complex:
    return complex(omega) * np.sqrt(lattice.eps_bg)


def _as_wavenumber(k: complex):
    k = complex(k)
    return k.real if k.imag == 0 else k


def self_cell_integral(a_eq, k: complex):
    """Integral of g over a disk of radius a_eq centered on the singularity."""
    k = _as_wavenumber(k)
    return 1j * np.pi * a_eq / (2 * k) * hankel1_first_kind(k * np.asarray(a_eq)) - 1 / k ** 2


def disk_source_integral(d, a_eq, k: complex):
    """
    Integral of g(r - s) over source points s in a disk of radius a_eq, for an
    observer at distance d < a_eq from the disk center.
    """
    k = _as_wavenumber(k)
    return (1j * np.pi * a_eq / (2 * k) * bessel_j0(k * np.asarray(d))
            * hankel1_first_kind(k * np.asarray(a_eq)) - 1 / k ** 2)


def green_matrix(mesh: ScattererMesh, k: complex) -> np.ndarray:
    """
    Symmetric cell-to-cell Green matrix: g(|s_i - s_j|) off the diagonal and
    the cell average of g on it. Only the upper block triangle is evaluated.
    """
    k = _as_wavenumber(k)
    n = mesh.size
    centers = mesh.centers
    G = np.empty((n, n), dtype=complex)
    for i0 in range(0, n, ROW_BLOCK):
        i1 = min(n, i0 + ROW_BLOCK)
        d = cdist(centers[i0:i1], centers[i0:])
        diag = (np.arange(i1 - i0), np.arange(i1 - i0))
        d[diag] = 1.0
        block = 0.25j * hankel0_first_kind(k * d)
        block[diag] = self_cell_integral(mesh.equivalent_radii[i0:i1], k) / mesh.areas[i0:i1]
        G[i0:i1, i0:] = block
        G[i0:, i0:i1] = block.T
    return G


def assemble_ls_operator(lattice: RodLattice2D, omega: complex, mesh: ScattererMesh) -> np.ndarray:
    """A(omega) = k0^2 G diag(delta_eps * area); its eigenvalue 1 marks a QNM."""
    omega = complex(omega)
    if omega == 0:
        raise ValueError("operator is undefined at omega = 0")
    if lattice.is_homogeneous:
        return np.zeros((mesh.size, mesh.size), dtype=complex)

    A = green_matrix(mesh, background_wavenumber(lattice, omega))
    A *= omega ** 2 * (lattice.delta_eps * mesh.areas)[None, :]
    return A


def cell_kernel(points: np.ndarray, mesh: ScattererMesh, k: complex) -> np.ndarray:
    """
    Average of g(r - s) over each cell, as seen from arbitrary points r:
    point-like beyond the equal-area disk, the disk-source integral inside
    it. A point that coincides with a cell center sees every other cell as a
    point source, which reproduces the rows of the assembled operator.
    """
    k = _as_wavenumber(k)
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    d = cdist(points, mesh.centers)
    a_eq = mesh.equivalent_radii[None, :]

    tiny = 1e-10 * mesh.pixel_size
    coincident = d < tiny
    near = (d < a_eq) & (coincident | ~coincident.any(axis=1, keepdims=True))

    kernel = np.empty(d.shape, dtype=complex)
    far = ~near
    kernel[far] = 0.25j * hankel0_first_kind(k * d[far])
    if near.any():
        rows, cols = np.nonzero(near)
        kernel[rows, cols] = disk_source_integral(d[rows, cols], mesh.equivalent_radii[cols], k) / mesh.areas[cols]
    return kernel


def chunked(points: np.ndarray):
    """Yield (start, stop) slices bounding memory of point-by-cell kernels."""
    size = settings.FIELD_CHUNK_SIZE
    for start in range(0, points.shape[0], size):
        yield start, min(points.shape[0], start + size)
