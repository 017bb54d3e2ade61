from dataclasses import replace
from typing import Optional, Tuple

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import ConfigurationError
from src.numerics.quadrature import gauss_legendre_panels, panel_edges
from src.qnm1d.field import Qnm1D

QUAD_NODES_1D = 16


def interval_rule(mode: Qnm1D, x_left: float, x_right: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule on [x_left, x_right] with every interface
    as a panel edge and panels no wider than half a local wavelength.
    """
    k_max = float(np.max(np.abs(mode.region_k)))
    width = min(settings.QUAD_PANEL_WIDTH, np.pi / k_max)
    edges = panel_edges(x_left, x_right, width, include=mode.stack.interfaces)
    nodes, weights, _ = gauss_legendre_panels(edges, QUAD_NODES_1D)
    return nodes, weights


def qnm_inner_product_1d(mode_a: Qnm1D, mode_b: Qnm1D, boundary: Optional[Tuple[float, float]] = None) -> complex:
    """
    Unconjugated product int eps f_a f_b dx plus the two-point surface term
    i sqrt(eps_B) / (omega_a + omega_b) [f_a f_b(x_right) + f_a f_b(x_left)].

    The result does not depend on the boundary as long as it encloses the
    stack: the surface term absorbs the exponentially growing tail integral.
    """
    stack = mode_a.stack
    x_left, x_right = boundary if boundary is not None else (0.0, stack.length)
    if x_left > 0 or x_right < stack.length:
        raise ConfigurationError(f"interval [{x_left}, {x_right}] does not enclose the stack [0, {stack.length}]")

    volume = 0j
    if x_right > x_left:
        x, w = interval_rule(mode_a, x_left, x_right)
        eps = mode_a.region_eps[np.searchsorted(stack.interfaces, x, side="right")]
        volume = np.sum(w * eps * mode_a.field_at(x) * mode_b.field_at(x))

    ends = np.array([x_left, x_right])
    product = mode_a.field_at(ends) * mode_b.field_at(ends)
    omega_sum = mode_a.omega.omega + mode_b.omega.omega
    surface = 1j / omega_sum * (np.sqrt(stack.eps_left) * product[0] + np.sqrt(stack.eps_right) * product[1])
    return complex(volume + surface)


def normalize_qnm_1d(mode: Qnm1D) -> Qnm1D:
    """Rescale so that <<f|f>> = 1; the stored norm is recomputed afterwards."""
    norm = qnm_inner_product_1d(mode, mode)
    normalized = mode.scaled(1 / np.sqrt(norm))
    return replace(normalized, norm=qnm_inner_product_1d(normalized, normalized))
