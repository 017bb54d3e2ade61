from typing import Callable, Optional, Tuple, Union

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import ModeNodeError, NonPositiveVolumeError
from src.numerics.quadrature import gauss_legendre_panels, panel_edges, polar_disk_rule
from src.qnm1d.field import Qnm1D
from src.qnm1d.inner_product import interval_rule
from src.qnm2d.field import Qnm2D
from src.qnm2d.inner_product import epsilon_weighted_integrals
from src.structures.models import LayeredStack1D, RodLattice2D
from src.structures.permittivity import epsilon_at, epsilon_map

GENERIC_NODES = 16

Field = Union[Qnm1D, Qnm2D, Callable[[np.ndarray], np.ndarray]]


def _evaluate(field: Field, points: np.ndarray) -> np.ndarray:
    if isinstance(field, (Qnm1D, Qnm2D)):
        return field.field_at(points)
    if callable(field):
        return np.asarray(field(points), dtype=complex)
    return np.asarray(field, dtype=complex)


def quadrature_grid(spec: Union[LayeredStack1D, RodLattice2D], domain) -> Tuple[np.ndarray, np.ndarray]:
    """
    Points and weights over a domain: an interval (x_left, x_right) for a
    stack, a disk radius for a lattice.
    """
    if isinstance(spec, LayeredStack1D):
        x_left, x_right = domain
        edges = panel_edges(x_left, x_right, settings.QUAD_PANEL_WIDTH / 4, include=spec.interfaces)
        nodes, weights, _ = gauss_legendre_panels(edges, GENERIC_NODES)
        return nodes, weights
    include = np.concatenate([np.linalg.norm(spec.rod_centers, axis=1) + s * spec.rod_radius for s in (-1, 1)])
    rule = polar_disk_rule(float(domain), 0.0, include=include[include < float(domain)])
    return rule.points, rule.weights


def hermitian_inner_product(field_a: Field, field_b: Field, spec, domain) -> complex:
    """
    int eps conj(f_a) f_b over the domain. Fields are modes, callables, or
    arrays sampled on quadrature_grid(spec, domain).
    """
    points, weights = quadrature_grid(spec, domain)
    eps = epsilon_map(spec, points)
    return complex(np.sum(weights * eps * np.conj(_evaluate(field_a, points)) * _evaluate(field_b, points)))


def _reference_intensity(mode: Field, spec, r_c, guard_scale: Optional[float] = None) -> complex:
    """f(r_c), guarded against reference points on a node."""
    value = complex(np.ravel(_evaluate(mode, np.asarray(r_c, dtype=float)))[0])
    if guard_scale is None:
        if isinstance(mode, Qnm1D):
            guard_scale = float(np.max(np.abs(mode.samples) ** 2))
        elif isinstance(mode, Qnm2D):
            guard_scale = float(np.max(np.abs(mode.interior_values) ** 2))
        else:
            guard_scale = abs(value) ** 2
    if abs(value) ** 2 < settings.NODE_GUARD * guard_scale or value == 0:
        raise ModeNodeError(f"reference point {np.ravel(r_c).tolist()} sits on a node of the mode")
    return value


def normal_mode_volume(mode: Field, spec, r_c, domain) -> Union[float, np.ndarray]:
    """
    Conventional volume int_V eps |f|^2 / (eps(r_c) |f(r_c)|^2). For a
    crystallite mode the domain may be a sequence of radii.
    """
    f_c = _reference_intensity(mode, spec, r_c)
    denominator = epsilon_at(spec, r_c) * abs(f_c) ** 2

    if isinstance(mode, Qnm2D) and isinstance(spec, RodLattice2D):
        energy = epsilon_weighted_integrals(mode, mode, np.atleast_1d(domain), conjugate=True).real
        volume = energy / denominator
        return float(volume[0]) if np.isscalar(domain) else volume
    if isinstance(mode, Qnm1D) and isinstance(spec, LayeredStack1D):
        x_left, x_right = domain
        x, w = interval_rule(mode, x_left, x_right)
        energy = np.sum(w * epsilon_map(spec, x) * np.abs(mode.field_at(x)) ** 2)
        return float(energy / denominator)
    return float(hermitian_inner_product(mode, mode, spec, domain).real / denominator)


def complex_mode_volume(mode: Union[Qnm1D, Qnm2D], r_c) -> complex:
    """
    v_Q = <<f|f>> / f(r_c)^2. The stored norm is 1 for a normalized mode and
    tracks any later rescaling.
    """
    spec = mode.stack if isinstance(mode, Qnm1D) else mode.lattice
    return complex(mode.norm) / _reference_intensity(mode, spec, r_c) ** 2


def quasinormal_mode_volume(mode: Union[Qnm1D, Qnm2D], r_c, n_c: float) -> Tuple[complex, float]:
    """v_Q together with V_eff = |v_Q|^2 / (n_c^2 Re v_Q)."""
    v_q = complex_mode_volume(mode, r_c)
    return v_q, effective_volume(v_q, n_c)


def effective_volume(v_q: complex, n_c: float) -> float:
    if v_q.real <= 0:
        raise NonPositiveVolumeError(f"Re v_Q = {v_q.real:.4e} is not positive")
    return abs(v_q) ** 2 / (n_c ** 2 * v_q.real)
