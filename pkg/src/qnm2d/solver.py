from typing import List, Optional, Tuple

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import NoConvergenceError, NumericalError
from src.app.core.logging import get_logger
from src.app.core.utils import parallel_map
from src.numerics.eigen import EigenPair, nearest_eigenpairs
from src.numerics.frequency import ComplexFrequency
from src.numerics.roots import find_root_complex
from src.qnm2d.field import Qnm2D
from src.qnm2d.inner_product import normalize_qnm_2d
from src.qnm2d.mesh import ScattererMesh, build_scatterer_mesh
from src.qnm2d.operator import assemble_ls_operator
from src.structures.models import RodLattice2D

logger = get_logger()


def eigenpairs_near_one(lattice: RodLattice2D, omega: complex, mesh: ScattererMesh, count: int = 1) -> List[EigenPair]:
    return nearest_eigenpairs(assemble_ls_operator(lattice, omega, mesh), target=1.0, count=count)


def seed_qnm_2d(
    lattice: RodLattice2D,
    mesh: Optional[ScattererMesh] = None,
    nu_min: Optional[float] = None,
    nu_max: Optional[float] = None,
    step: Optional[float] = None,
    threads: Optional[int] = None,
) -> Tuple[complex, np.ndarray, np.ndarray]:
    """
    Real-frequency scan of omega a / 2 pi c for the operator eigenvalue
    closest to 1. Returns the angular guess at the best scan point together
    with the scanned reduced frequencies and their |lambda - 1|.
    """
    mesh = build_scatterer_mesh(lattice) if mesh is None else mesh
    nu_min = settings.SEED_SCAN_MIN if nu_min is None else nu_min
    nu_max = settings.SEED_SCAN_MAX if nu_max is None else nu_max
    step = settings.SEED_SCAN_STEP if step is None else step

    grid = np.arange(nu_min, nu_max + step / 2, step)

    def distance_to_one(nu: float) -> float:
        return abs(eigenpairs_near_one(lattice, 2 * np.pi * nu, mesh)[0].value - 1)

    distance = np.array(parallel_map(distance_to_one, grid, threads))
    best = grid[int(np.argmin(distance))]
    logger.info(f"Seed scan for '{lattice.name}': best omega a/2pi c = {best:.4f} "
                f"(|lambda - 1| = {distance.min():.3e})")
    return complex(2 * np.pi * best), grid, distance


def find_qnm_2d(
    lattice: RodLattice2D,
    omega_guess: Optional[complex] = None,
    resolution: Optional[int] = None,
    mesh: Optional[ScattererMesh] = None,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    norm_radius: Optional[float] = None,
    threads: Optional[int] = None,
) -> Qnm2D:
    """
    Self-consistent QNM of the crystallite: Newton on lambda(omega) - 1 for
    the operator eigenvalue nearest 1. omega_guess is angular (omega a / c);
    without it the real-frequency seed scan provides one.
    """
    mesh = build_scatterer_mesh(lattice, resolution) if mesh is None else mesh
    tol = settings.ROOT_TOL_2D if tol is None else tol
    max_iter = settings.ROOT_MAX_ITER if max_iter is None else max_iter

    if lattice.is_homogeneous:
        raise NoConvergenceError("homogeneous lattice has no quasinormal modes",
                                 complex(omega_guess or 0), float("inf"))
    if omega_guess is None:
        omega_guess, _, _ = seed_qnm_2d(lattice, mesh, threads=threads)

    logger.info(f"Solving 2D QNM of '{lattice.name}' ({mesh.size} cells) from omega={complex(omega_guess):.6g}")
    try:
        root = find_root_complex(
            lambda w: eigenpairs_near_one(lattice, w, mesh)[0].value - 1.0,
            omega_guess,
            tol=tol,
            max_iter=max_iter,
        )
        omega = ComplexFrequency.accepted(root)
        pairs = eigenpairs_near_one(lattice, root, mesh, count=2)
    except NumericalError as e:
        logger.error(f"2D QNM search failed for '{lattice.name}': {e}")
        raise

    near_degenerate = len(pairs) > 1 and abs(pairs[1].value - 1) < settings.COLLISION_THRESHOLD
    if near_degenerate:
        logger.warning(f"Mode collision at omega={root:.8g}: second eigenvalue {pairs[1].value:.8g} "
                       f"within {settings.COLLISION_THRESHOLD} of 1")

    mode = Qnm2D(
        lattice=lattice,
        mesh=mesh,
        omega=omega,
        interior_values=pairs[0].vector,
        eigenvalue=pairs[0].value,
        near_degenerate=near_degenerate,
    )
    mode = normalize_qnm_2d(mode, norm_radius)
    logger.info(f"2D QNM of '{lattice.name}': omega a/2pi c = {omega.normalized:.6f}, Q = {omega.q_factor:.4g}")
    return mode


def operator_residual(mode: Qnm2D) -> float:
    """||A(omega) u - u|| / ||u|| at the converged frequency."""
    A = assemble_ls_operator(mode.lattice, mode.omega.omega, mode.mesh)
    u = mode.interior_values
    return float(np.linalg.norm(A @ u - u) / np.linalg.norm(u))
