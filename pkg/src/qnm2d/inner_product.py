from dataclasses import replace
from typing import Iterable, Optional

import numpy as np

from src.app.core.config import settings
from src.app.core.exceptions import InvalidRadiiError
from src.numerics.quadrature import PolarDiskRule, angular_count, circle_rule, polar_disk_rule
from src.qnm2d.field import Qnm2D
from src.structures.models import RodLattice2D


def default_norm_radius(lattice: RodLattice2D) -> float:
    return lattice.circumradius + settings.NORM_RADIUS_MARGIN


def check_radii(lattice: RodLattice2D, radii: Iterable[float]) -> np.ndarray:
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    if radii.size == 0:
        raise InvalidRadiiError("no radii given")
    if np.any(np.diff(radii) <= 0):
        raise InvalidRadiiError(f"radii must be strictly increasing, got {radii.tolist()}")
    if radii[0] <= lattice.circumradius:
        raise InvalidRadiiError(
            f"radius {radii[0]} does not enclose the crystallite (circumradius {lattice.circumradius})"
        )
    return radii


def disk_rule_for(mode: Qnm2D, radii: np.ndarray) -> PolarDiskRule:
    return polar_disk_rule(float(radii[-1]), mode.k_background, include=(*radii, mode.lattice.circumradius))


def edge_positions(rule: PolarDiskRule, radii: np.ndarray) -> np.ndarray:
    """Positions in rule.cumulative(...) of the disks bounded by the given radii."""
    index = np.array([int(np.argmin(np.abs(rule.edges[1:] - r))) for r in radii])
    if not np.allclose(rule.edges[1:][index], radii, rtol=0, atol=1e-12):
        raise ValueError("radii are not panel edges of the disk rule")
    return index


def epsilon_weighted_integrals(
    mode_a: Qnm2D,
    mode_b: Qnm2D,
    radii,
    conjugate: bool = False,
    rule: Optional[PolarDiskRule] = None,
    fields: Optional[tuple] = None,
) -> np.ndarray:
    """
    int eps f_a f_b dA over disks of the given radii, or with f_a conjugated.
    The background part eps_B f_a f_b is integrated on a polar rule over the
    whole disk, the excess delta_eps f_a f_b on the scatterer cells.
    """
    lattice = mode_a.lattice
    radii = check_radii(lattice, radii)
    rule = disk_rule_for(mode_a, radii) if rule is None else rule
    if fields is None:
        fa = mode_a.field_at(rule.points)
        fb = fa if mode_b is mode_a else mode_b.field_at(rule.points)
    else:
        fa, fb = fields

    ua, ub = mode_a.interior_values, mode_b.interior_values
    if conjugate:
        fa, ua = np.conj(fa), np.conj(ua)

    background = lattice.eps_bg * rule.cumulative(fa * fb)[edge_positions(rule, radii)]
    rods = np.sum(lattice.delta_eps * mode_a.mesh.areas * ua * ub)
    return background + rods


def surface_term_2d(mode_a: Qnm2D, mode_b: Qnm2D, radius: float) -> complex:
    """i sqrt(eps_B) / (omega_a + omega_b) times the line integral of f_a f_b over |r| = radius."""
    k = max(abs(mode_a.k_background), abs(mode_b.k_background))
    points, weights = circle_rule(radius, angular_count(k, radius))
    fa = mode_a.field_at(points)
    fb = fa if mode_b is mode_a else mode_b.field_at(points)
    omega_sum = mode_a.omega.omega + mode_b.omega.omega
    return complex(1j * np.sqrt(mode_a.lattice.eps_bg) / omega_sum * np.sum(weights * fa * fb))


def qnm_inner_products_2d(mode_a: Qnm2D, mode_b: Qnm2D, radii) -> np.ndarray:
    """<<f_a|f_b>> for a family of normalization radii from one field evaluation."""
    radii = check_radii(mode_a.lattice, radii)
    volume = epsilon_weighted_integrals(mode_a, mode_b, radii)
    surface = np.array([surface_term_2d(mode_a, mode_b, r) for r in radii])
    return volume + surface


def qnm_inner_product_2d(mode_a: Qnm2D, mode_b: Qnm2D, radius: Optional[float] = None) -> complex:
    """
    Unconjugated product over the disk of the given radius plus the line
    term over its boundary circle.
    """
    radius = default_norm_radius(mode_a.lattice) if radius is None else radius
    return complex(qnm_inner_products_2d(mode_a, mode_b, [radius])[0])


def normalize_qnm_2d(mode: Qnm2D, radius: Optional[float] = None) -> Qnm2D:
    """
    Rescale so that <<f|f>> = 1 at the given radius. The product is a
    quadratic form, so the stored norm is updated without re-integrating.
    """
    radius = default_norm_radius(mode.lattice) if radius is None else radius
    norm = qnm_inner_product_2d(mode, mode, radius)
    alpha = 1 / np.sqrt(norm)
    return replace(mode.scaled(alpha), norm=norm * alpha ** 2, norm_radius=radius)
