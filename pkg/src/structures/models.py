"""
Declarative cavity descriptions.

Both variants are frozen pydantic models so they can be loaded from the JSON
structure schema, hashed into caches and shared between worker processes.
"""
from functools import lru_cache
from typing import Annotated, List, Literal, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, model_validator

from src.app.core.exceptions import InvalidGeometryError


@lru_cache(maxsize=32)
def _hexagonal_sites(rings: int, a: float) -> np.ndarray:
    centers: List[Tuple[float, float]] = []
    corners = [np.array([np.cos(np.pi * j / 3), np.sin(np.pi * j / 3)]) for j in range(7)]
    for ring in range(1, rings + 1):
        for side in range(6):
            edge = corners[side + 1] - corners[side]
            for step in range(ring):
                point = a * (ring * corners[side] + step * edge)
                centers.append((float(point[0]), float(point[1])))
    sites = np.array(centers, dtype=float)
    sites.flags.writeable = False
    return sites


class Layer(BaseModel):
    model_config = ConfigDict(frozen=True)

    thickness: float = Field(gt=0, description="layer thickness")
    eps: float = Field(ge=1.0, description="real relative permittivity of the layer")


class LayeredStack1D(BaseModel):
    model_config = ConfigDict(frozen=True)

    type: Literal["layered_stack"] = "layered_stack"
    name: str = Field(default="layered-stack", description="human readable name")
    eps_left: float = Field(default=1.0, ge=1.0, description="permittivity of the x < 0 cladding")
    eps_right: float = Field(default=1.0, ge=1.0, description="permittivity of the x > L cladding")
    layers: Tuple[Layer, ...] = Field(default=(), description="layers ordered along +x, starting at x = 0")

    @property
    def interfaces(self) -> np.ndarray:
        """Interface positions 0, d1, d1+d2, ..., L."""
        return np.concatenate([[0.0], np.cumsum([layer.thickness for layer in self.layers])])

    @property
    def length(self) -> float:
        return float(self.interfaces[-1])

    @property
    def permittivities(self) -> np.ndarray:
        return np.array([layer.eps for layer in self.layers], dtype=float)


class RodLattice2D(BaseModel):
    model_config = ConfigDict(frozen=True)

    type: Literal["rod_lattice"] = "rod_lattice"
    name: str = Field(default="rod-lattice", description="human readable name")
    a: float = Field(default=1.0, gt=0, description="lattice constant")
    rod_radius: float = Field(gt=0, description="rod radius R")
    eps_rod: float = Field(ge=1.0, description="rod permittivity")
    eps_bg: float = Field(default=1.0, ge=1.0, description="background permittivity eps_B")
    layers: int = Field(description="number N of complete hexagonal rings around the missing rod")

    @model_validator(mode="after")
    def check_geometry(self):
        if self.layers < 1:
            raise InvalidGeometryError(f"crystallite needs at least one ring, got N={self.layers}")
        if self.a <= 2 * self.rod_radius:
            raise InvalidGeometryError(
                f"rods overlap: lattice constant {self.a} must exceed the rod diameter {2 * self.rod_radius}"
            )
        if self.eps_rod < self.eps_bg:
            raise InvalidGeometryError("eps_rod must not be below eps_bg")
        return self

    @property
    def rod_centers(self) -> np.ndarray:
        """(3N(N+1), 2) read-only array of rod centers, ordered by ring then angle."""
        return _hexagonal_sites(self.layers, self.a)

    @property
    def delta_eps(self) -> float:
        return self.eps_rod - self.eps_bg

    @property
    def circumradius(self) -> float:
        return self.layers * self.a + self.rod_radius

    @property
    def is_homogeneous(self) -> bool:
        return self.delta_eps == 0.0


StructureSpec = Annotated[Union[LayeredStack1D, RodLattice2D], Field(discriminator="type")]

structure_adapter = TypeAdapter(StructureSpec)


def structure_from_dict(data: dict) -> Union[LayeredStack1D, RodLattice2D]:
    return structure_adapter.validate_python(data)


def load_structure(json_text: str) -> Union[LayeredStack1D, RodLattice2D]:
    """
    Parse a structure document, e.g. {"type": "rod_lattice", "layers": 2, ...}.
    """
    return structure_adapter.validate_json(json_text)
