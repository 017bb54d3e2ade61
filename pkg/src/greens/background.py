import numpy as np

from src.app.core.exceptions import CoincidentPointError
from src.numerics.special import hankel0_first_kind


def greens_background_2d(r, r_prime, omega: complex, eps_B: float = 1.0, imag_only: bool = False) -> complex:
    """
    (i/4) H0(k_B |r - r'|) with k_B = omega sqrt(eps_B).

    At coincidence the real part diverges logarithmically; only the finite
    imaginary part 1/4 is available there, and only when imag_only is set.
    """
    distance = float(np.hypot(*(np.asarray(r, dtype=float) - np.asarray(r_prime, dtype=float))))
    if distance == 0:
        if not imag_only:
            raise CoincidentPointError("the 2D Green's function diverges at r = r'; request imag_only")
        return 0.25j
    k = complex(omega) * np.sqrt(eps_B)
    value = 0.25j * hankel0_first_kind(k.real * distance if k.imag == 0 else k * distance)
    return complex(value.imag * 1j) if imag_only else complex(value)


def greens_background_1d(x: float, x_prime: float, omega: complex, eps_B: float = 1.0) -> complex:
    """i exp(ik|x - x'|) / 2k, the outgoing solution of g'' + k^2 g = -delta."""
    k = complex(omega) * np.sqrt(eps_B)
    return complex(1j * np.exp(1j * k * abs(x - x_prime)) / (2 * k))
