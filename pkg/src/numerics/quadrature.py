"""
Quadrature rules for the normalization and mode-volume integrals.

The disk rule is panelled in the radial direction so that every requested
radius is a panel edge; integrals over a family of concentric disks are then
cumulative sums over panels of a single field evaluation.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple

import numpy as np

from src.app.core.config import settings


@lru_cache(maxsize=16)
def _reference_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_legendre(a: float, b: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """n-point Gauss-Legendre nodes and weights on [a, b]."""
    x, w = _reference_rule(n)
    half = 0.5 * (b - a)
    return 0.5 * (a + b) + half * x, half * w


def panel_edges(start: float, stop: float, width: float, include: Iterable[float] = ()) -> np.ndarray:
    """
    Sorted panel edges covering [start, stop] with panels no wider than
    `width`; every value of `include` inside the interval becomes an edge.
    """
    if stop <= start:
        raise ValueError(f"empty interval [{start}, {stop}]")
    anchors = np.unique(np.concatenate([[start, stop], [v for v in include if start < v < stop]]))
    edges = [anchors[0]]
    for lo, hi in zip(anchors[:-1], anchors[1:]):
        count = max(1, int(np.ceil((hi - lo) / width - 1e-12)))
        edges.extend(np.linspace(lo, hi, count + 1)[1:])
    return np.asarray(edges)


def gauss_legendre_panels(edges: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule; returns nodes, weights and the panel index
    of every node.
    """
    edges = np.asarray(edges, dtype=float)
    x, w = _reference_rule(n)
    lo, hi = edges[:-1, None], edges[1:, None]
    nodes = 0.5 * (lo + hi) + 0.5 * (hi - lo) * x[None, :]
    weights = 0.5 * (hi - lo) * w[None, :]
    panels = np.repeat(np.arange(edges.size - 1), n)
    return nodes.ravel(), weights.ravel(), panels


def angular_count(k: complex, radius: float) -> int:
    """Even number of trapezoid angles resolving exp(i k rho theta) at `radius`."""
    count = max(settings.QUAD_MIN_ANGULAR, int(np.ceil(settings.QUAD_ANGULAR_DENSITY * abs(k) * radius)))
    return count + (count % 2)


def circle_rule(radius: float, count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Trapezoid rule for line integrals over the circle |r| = radius."""
    theta = 2 * np.pi * np.arange(count) / count
    points = radius * np.column_stack([np.cos(theta), np.sin(theta)])
    return points, np.full(count, 2 * np.pi * radius / count)


@dataclass(frozen=True)
class PolarDiskRule:
    """
    Area rule on the disk of radius edges[-1]: Gauss-Legendre in rho on
    every panel, periodic trapezoid in theta with a per-panel angle count.
    """
    edges: np.ndarray
    points: np.ndarray
    weights: np.ndarray
    panel: np.ndarray

    def cumulative(self, integrand: np.ndarray) -> np.ndarray:
        """Integral over the disks bounded by edges[1:], one value per edge."""
        per_panel = np.bincount(self.panel, weights=np.real(integrand * self.weights), minlength=self.edges.size - 1)
        if np.iscomplexobj(integrand):
            per_panel = per_panel + 1j * np.bincount(
                self.panel, weights=np.imag(integrand * self.weights), minlength=self.edges.size - 1
            )
        return np.cumsum(per_panel)

    def integrate(self, integrand: np.ndarray):
        return np.sum(integrand * self.weights)

    def up_to(self, radius: float) -> np.ndarray:
        """Mask selecting the nodes of the disk bounded by the edge `radius`."""
        index = int(np.argmin(np.abs(self.edges - radius)))
        if not np.isclose(self.edges[index], radius, rtol=0, atol=1e-12):
            raise ValueError(f"radius {radius} is not a panel edge")
        return self.panel < index


def polar_disk_rule(radius: float, k: complex = 0.0, include: Iterable[float] = (),
                    width: float | None = None, nodes: int | None = None) -> PolarDiskRule:
    width = settings.QUAD_PANEL_WIDTH if width is None else width
    nodes = settings.QUAD_RADIAL_NODES if nodes is None else nodes
    edges = panel_edges(0.0, radius, width, include)

    points, weights, panels = [], [], []
    for p, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        rho, w_rho = gauss_legendre(lo, hi, nodes)
        count = angular_count(k, hi)
        theta = 2 * np.pi * np.arange(count) / count
        rr, tt = np.meshgrid(rho, theta, indexing="ij")
        points.append(np.column_stack([(rr * np.cos(tt)).ravel(), (rr * np.sin(tt)).ravel()]))
        weights.append(np.repeat(w_rho * rho * 2 * np.pi / count, count))
        panels.append(np.full(rho.size * count, p))

    return PolarDiskRule(
        edges=edges,
        points=np.concatenate(points),
        weights=np.concatenate(weights),
        panel=np.concatenate(panels),
    )
