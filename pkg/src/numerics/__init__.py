from src.numerics.eigen import EigenPair, dense_eigensolve, nearest_eigenpairs
from src.numerics.frequency import ComplexFrequency
from src.numerics.quadrature import (
    PolarDiskRule,
    circle_rule,
    gauss_legendre,
    gauss_legendre_panels,
    panel_edges,
    polar_disk_rule,
)
from src.numerics.roots import find_root_complex
from src.numerics.special import bessel_j0, bessel_y0, hankel0_first_kind, hankel1_first_kind

__all__ = [
    "EigenPair",
    "dense_eigensolve",
    "nearest_eigenpairs",
    "ComplexFrequency",
    "PolarDiskRule",
    "circle_rule",
    "gauss_legendre",
    "gauss_legendre_panels",
    "panel_edges",
    "polar_disk_rule",
    "find_root_complex",
    "bessel_j0",
    "bessel_y0",
    "hankel0_first_kind",
    "hankel1_first_kind",
]
