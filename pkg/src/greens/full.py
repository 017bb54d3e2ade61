from typing import Optional

import numpy as np
from scipy import linalg

from src.app.core.exceptions import ConfigurationError, SingularSystemError
from src.app.core.logging import get_logger
from src.greens.background import greens_background_2d
from src.qnm1d.field import Qnm1D
from src.qnm2d.mesh import ScattererMesh, build_scatterer_mesh
from src.qnm2d.operator import assemble_ls_operator, background_wavenumber, cell_kernel
from src.numerics.frequency import ComplexFrequency
from src.structures.models import Layer, LayeredStack1D, RodLattice2D

logger = get_logger()

PIVOT_RATIO_LIMIT = 1e-13


def _real_frequency(omega) -> float:
    omega = complex(omega)
    if omega.imag != 0:
        raise ConfigurationError(f"full Green's function is evaluated at real frequencies, got {omega}")
    if omega.real <= 0:
        raise ConfigurationError(f"frequency must be positive, got {omega.real}")
    return omega.real


class FullGreensSolver:
    """
    Green's function of the crystallite at one real frequency.

    G(r, r') = g_B(r, r') + k0^2 sum_j <g(r - s)>_j delta_eps a_j u_j(r'),
    with (I - A) u(r') = <g(s_i - r')>. The LU factorization of I - A is
    computed once and reused for every source point.
    """

    def __init__(self, lattice: RodLattice2D, omega: float, mesh: Optional[ScattererMesh] = None):
        self.lattice = lattice
        self.omega = _real_frequency(omega)
        self.mesh = build_scatterer_mesh(lattice) if mesh is None else mesh
        self.k = background_wavenumber(lattice, self.omega).real
        self.weights = self.omega ** 2 * lattice.delta_eps * self.mesh.areas
        self._lu = None if lattice.is_homogeneous else self._factorize()

    def _factorize(self):
        system = np.eye(self.mesh.size, dtype=complex) - assemble_ls_operator(self.lattice, self.omega, self.mesh)
        try:
            lu, piv = linalg.lu_factor(system, check_finite=True)
        except (linalg.LinAlgError, ValueError) as e:
            logger.error(f"LU factorization failed at omega={self.omega:.8g}: {e}")
            raise SingularSystemError(f"Dyson system could not be factorized at omega={self.omega:.8g}: {e}")

        pivots = np.abs(np.diag(lu))
        if pivots.min() <= PIVOT_RATIO_LIMIT * pivots.max():
            logger.error(f"Ill-conditioned Dyson system at omega={self.omega:.8g}")
            raise SingularSystemError(
                f"Dyson system is numerically singular at omega={self.omega:.8g} "
                f"(pivot ratio {pivots.min() / pivots.max():.2e})"
            )
        return lu, piv

    def _kernel_row(self, point) -> np.ndarray:
        return cell_kernel(np.asarray(point, dtype=float)[None, :], self.mesh, self.k)[0]

    def scattered(self, r, r_prime) -> complex:
        """G - g_B, finite everywhere including r = r'."""
        if self._lu is None:
            return 0j
        u = linalg.lu_solve(self._lu, self._kernel_row(r_prime))
        return complex(self.omega ** 2 * np.sum(self._kernel_row(r) * self.lattice.delta_eps * self.mesh.areas * u))

    def greens(self, r, r_prime, imag_only: bool = False) -> complex:
        background = greens_background_2d(r, r_prime, self.omega, self.lattice.eps_bg, imag_only=imag_only)
        scattered = self.scattered(r, r_prime)
        return background + (1j * scattered.imag if imag_only else scattered)

    def ldos(self, probe) -> float:
        """Im G(r, r) / Im g_B(r, r) with Im g_B(r, r) = 1/4."""
        return 1.0 + 4.0 * self.scattered(probe, probe).imag


def greens_full_2d(
    lattice: RodLattice2D,
    r,
    r_prime,
    omega: float,
    mesh: Optional[ScattererMesh] = None,
    imag_only: bool = False,
) -> complex:
    return FullGreensSolver(lattice, omega, mesh).greens(r, r_prime, imag_only=imag_only)


def _mirrored(stack: LayeredStack1D) -> LayeredStack1D:
    return LayeredStack1D(
        name=f"{stack.name}-mirrored",
        eps_left=stack.eps_right,
        eps_right=stack.eps_left,
        layers=tuple(Layer(thickness=layer.thickness, eps=layer.eps) for layer in reversed(stack.layers)),
    )


def greens_full_1d(stack: LayeredStack1D, x: float, x_prime: float, omega: complex) -> complex:
    """
    G = -u_L(x<) u_R(x>) / W from the solutions that are outgoing to the left
    (u_L) and to the right (u_R), W = u_L u_R' - u_L' u_R.
    """
    frequency = ComplexFrequency(complex(omega))
    left = Qnm1D.from_frequency(stack, frequency)
    right = Qnm1D.from_frequency(_mirrored(stack), frequency)
    length = stack.length

    def u_left(x):
        return complex(left.field_at(x)), complex(left.derivative_at(x))

    def u_right(x):
        return complex(right.field_at(length - x)), -complex(right.derivative_at(length - x))

    lo, hi = min(x, x_prime), max(x, x_prime)
    f_l, df_l = u_left(hi)
    f_r, df_r = u_right(hi)
    wronskian = f_l * df_r - df_l * f_r
    if wronskian == 0:
        raise SingularSystemError(f"omega={omega} is an eigenfrequency of the stack")
    return -u_left(lo)[0] * f_r / wronskian
