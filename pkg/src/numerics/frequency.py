from dataclasses import dataclass

import numpy as np

from src.app.core.exceptions import SpuriousRootError


@dataclass(frozen=True)
class ComplexFrequency:
    """
    Complex angular eigenfrequency (c = 1, lengths in units of a or L).
    """
    omega: complex

    @property
    def real(self) -> float:
        return float(np.real(self.omega))

    @property
    def imag(self) -> float:
        return float(np.imag(self.omega))

    @property
    def normalized(self) -> complex:
        """omega a / 2 pi c"""
        return complex(self.omega) / (2 * np.pi)

    @property
    def q_factor(self) -> float:
        return -self.real / (2 * self.imag)

    @classmethod
    def accepted(cls, omega: complex) -> "ComplexFrequency":
        """
        Wrap a converged root, rejecting roots that cannot be a decaying
        positive-frequency mode.
        """
        omega = complex(omega)
        if omega.imag >= 0:
            raise SpuriousRootError(f"root {omega:.10g} has non-negative imaginary part")
        if omega.real <= 0:
            raise SpuriousRootError(f"root {omega:.10g} has non-positive real part")
        return cls(omega)

    @classmethod
    def from_normalized(cls, value: complex) -> "ComplexFrequency":
        return cls(complex(value) * 2 * np.pi)
