from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from src.app.core.config import settings
from src.numerics.frequency import ComplexFrequency
from src.qnm1d.transfer import interface_states, wavenumber
from src.structures.models import LayeredStack1D


@dataclass(frozen=True, eq=False)
class Qnm1D:
    """
    Quasinormal mode of a layered stack.

    The field is stored through its interface states, so it can be evaluated
    exactly anywhere: layer-wise cos/sin propagation inside [0, L] and the
    outgoing tails B exp(-ik x) for x < 0 and A exp(ik (x - L)) for x > L.
    """
    stack: LayeredStack1D
    omega: ComplexFrequency
    states: np.ndarray
    scale: complex = 1.0
    norm: complex = 1.0

    @classmethod
    def from_frequency(cls, stack: LayeredStack1D, omega: ComplexFrequency) -> "Qnm1D":
        return cls(stack=stack, omega=omega, states=interface_states(stack, omega.omega))

    @cached_property
    def region_eps(self) -> np.ndarray:
        return np.concatenate([[self.stack.eps_left], self.stack.permittivities, [self.stack.eps_right]])

    @cached_property
    def region_k(self) -> np.ndarray:
        return wavenumber(self.omega.omega, self.region_eps)

    @property
    def tail_amplitudes(self) -> tuple:
        """(B, A): amplitudes of the left and right outgoing tails."""
        return self.scale * self.states[0, 0], self.scale * self.states[-1, 0]

    def _locate(self, x: np.ndarray):
        edges = self.stack.interfaces
        region = np.searchsorted(edges, x, side="right")
        return region, edges

    def field_at(self, x):
        x = np.asarray(x, dtype=float)
        shape = x.shape
        x = x.reshape(-1)
        region, edges = self._locate(x)
        k = self.region_k[region]
        n_layers = len(self.stack.layers)

        value = np.empty(x.shape, dtype=complex)
        left = region == 0
        right = region == n_layers + 1
        inside = ~(left | right)

        value[left] = self.states[0, 0] * np.exp(-1j * k[left] * x[left])
        value[right] = self.states[-1, 0] * np.exp(1j * k[right] * (x[right] - edges[-1]))
        j = region[inside] - 1
        u = k[inside] * (x[inside] - edges[j])
        value[inside] = self.states[j, 0] * np.cos(u) + self.states[j, 1] * np.sin(u) / k[inside]
        return (self.scale * value).reshape(shape)

    def derivative_at(self, x):
        x = np.asarray(x, dtype=float)
        shape = x.shape
        x = x.reshape(-1)
        region, edges = self._locate(x)
        k = self.region_k[region]
        n_layers = len(self.stack.layers)

        value = np.empty(x.shape, dtype=complex)
        left = region == 0
        right = region == n_layers + 1
        inside = ~(left | right)

        value[left] = -1j * k[left] * self.states[0, 0] * np.exp(-1j * k[left] * x[left])
        value[right] = 1j * k[right] * self.states[-1, 0] * np.exp(1j * k[right] * (x[right] - edges[-1]))
        j = region[inside] - 1
        u = k[inside] * (x[inside] - edges[j])
        value[inside] = -k[inside] * self.states[j, 0] * np.sin(u) + self.states[j, 1] * np.cos(u)
        return (self.scale * value).reshape(shape)

    def scaled(self, alpha: complex) -> "Qnm1D":
        """The same mode multiplied by alpha; the stored norm scales by alpha**2."""
        return replace(self, scale=self.scale * alpha, norm=self.norm * alpha ** 2)

    @property
    def grid(self) -> np.ndarray:
        """Uniform interior grid on [0, L] with the configured samples per local wavelength."""
        k_max = np.max(np.abs(self.region_k))
        spacing = 2 * np.pi / (k_max * settings.SAMPLES_PER_WAVELENGTH)
        count = max(2, int(np.ceil(self.stack.length / spacing)) + 1)
        return np.linspace(0.0, self.stack.length, count)

    @property
    def samples(self) -> np.ndarray:
        return self.field_at(self.grid)

    def helmholtz_residual(self) -> float:
        """
        ||f'' + omega^2 eps f|| / ||omega^2 eps f|| on the interior grid, with
        f'' from fourth-order central differences kept away from interfaces.
        """
        x = self.grid
        h = (x[1] - x[0]) / 4
        edges = self.stack.interfaces
        away = np.min(np.abs(x[:, None] - edges[None, :]), axis=1) > 2.5 * h
        x = x[away]
        if x.size == 0:
            return 0.0

        f = self.field_at(x)
        second = (-self.field_at(x + 2 * h) + 16 * self.field_at(x + h) - 30 * f
                  + 16 * self.field_at(x - h) - self.field_at(x - 2 * h)) / (12 * h ** 2)
        eps = self.region_eps[np.searchsorted(edges, x, side="right")]
        source = self.omega.omega ** 2 * eps * f
        return float(np.linalg.norm(second + source) / np.linalg.norm(source))
