"""
Transfer matrices of layered stacks for fields exp(-i omega t), c = 1.

Inside every region the field is carried as the state vector (f, f'), which
is continuous across interfaces. Cladding amplitudes (A, B) of
A exp(ik x) + B exp(-ik x) are referenced to x = 0 on the left and to x = L
on the right.
"""
from typing import Union

import numpy as np

from src.structures.models import LayeredStack1D


def wavenumber(omega: complex, eps: Union[float, np.ndarray]):
    return omega * np.sqrt(eps)


def amplitude_to_state(k: complex) -> np.ndarray:
    """Maps (A, B) to (f, f') at the reference point."""
    return np.array([[1.0, 1.0], [1j * k, -1j * k]], dtype=complex)


def state_to_amplitude(k: complex) -> np.ndarray:
    return np.array([[0.5, -0.5j / k], [0.5, 0.5j / k]], dtype=complex)


def layer_propagator(k: complex, thickness: float) -> np.ndarray:
    """Maps (f, f') at the left face of a homogeneous layer to its right face."""
    kd = k * thickness
    return np.array([[np.cos(kd), np.sin(kd) / k], [-k * np.sin(kd), np.cos(kd)]], dtype=complex)


def stack_propagator(stack: LayeredStack1D, omega: complex) -> np.ndarray:
    P = np.eye(2, dtype=complex)
    for layer in stack.layers:
        P = layer_propagator(wavenumber(omega, layer.eps), layer.thickness) @ P
    return P


def transfer_matrix(stack: LayeredStack1D, omega: complex) -> np.ndarray:
    """
    Maps (forward, backward) amplitudes in the left cladding to those in the
    right cladding. det M = k_left / k_right.
    """
    omega = complex(omega)
    if omega == 0:
        raise ValueError("transfer matrix is undefined at omega = 0")
    k_left = wavenumber(omega, stack.eps_left)
    k_right = wavenumber(omega, stack.eps_right)
    return state_to_amplitude(k_right) @ stack_propagator(stack, omega) @ amplitude_to_state(k_left)


def qnm_condition_1d(stack: LayeredStack1D, omega: complex) -> complex:
    """
    Incoming amplitude in the right cladding produced by a purely outgoing
    left solution (A_L, B_L) = (0, 1). Vanishes exactly at the QNM frequencies.
    """
    return complex(transfer_matrix(stack, omega)[1, 1])


def interface_states(stack: LayeredStack1D, omega: complex) -> np.ndarray:
    """
    (f, f') at every interface 0, d1, ..., L for the outgoing left solution
    f(x) = exp(-i k_left x), x < 0.
    """
    omega = complex(omega)
    states = np.empty((len(stack.layers) + 1, 2), dtype=complex)
    states[0] = (1.0, -1j * wavenumber(omega, stack.eps_left))
    for j, layer in enumerate(stack.layers):
        states[j + 1] = layer_propagator(wavenumber(omega, layer.eps), layer.thickness) @ states[j]
    return states


def fabry_perot_frequency(index: float, order: int, length: float = 1.0) -> complex:
    """Exact QNM of a bare slab in air: (m pi - i ln((n+1)/(n-1))) / (n L)."""
    if index <= 1:
        raise ValueError(f"a bare slab in air needs index > 1, got {index}")
    return (order * np.pi - 1j * np.log((index + 1) / (index - 1))) / (index * length)
