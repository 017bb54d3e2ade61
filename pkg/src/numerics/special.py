"""
Complex-argument cylinder functions for the 2D background Green's function.

Arguments with a negative imaginary part occur on every QNM iteration and
make the functions grow exponentially; scipy's AMOS-backed routines handle
that regime. Strictly positive real arrays take the faster real-argument
path.
"""
import numpy as np
from scipy import special

from src.app.core.exceptions import SpecialFunctionDomainError


def _as_argument(z):
    z = np.asarray(z)
    if np.any(z == 0):
        raise SpecialFunctionDomainError("cylinder functions of the second kind are singular at z = 0")
    return z


def _is_positive_real(z: np.ndarray) -> bool:
    if np.iscomplexobj(z):
        return False
    return bool(np.all(z > 0))


def _unwrap(value, z):
    return complex(value) if np.ndim(z) == 0 else value


def hankel0_first_kind(z):
    """H0^(1)(z) = J0(z) + i Y0(z)."""
    z = _as_argument(z)
    if _is_positive_real(z):
        value = special.j0(z) + 1j * special.y0(z)
    else:
        value = special.hankel1(0, z.astype(complex))
    return _unwrap(value, z)


def hankel1_first_kind(z):
    """H1^(1)(z) = J1(z) + i Y1(z)."""
    z = _as_argument(z)
    if _is_positive_real(z):
        value = special.j1(z) + 1j * special.y1(z)
    else:
        value = special.hankel1(1, z.astype(complex))
    return _unwrap(value, z)


def bessel_j0(z):
    z = np.asarray(z)
    return _unwrap(special.jv(0, z.astype(complex)), z)


def bessel_y0(z):
    z = _as_argument(z)
    return _unwrap(special.yv(0, z.astype(complex)), z)
