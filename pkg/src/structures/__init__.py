from src.structures.models import (
    Layer,
    LayeredStack1D,
    RodLattice2D,
    StructureSpec,
    load_structure,
    structure_from_dict,
)
from src.structures.lattice import build_hexagonal_crystallite, inside_rods, rod_index_at
from src.structures.permittivity import epsilon_at, epsilon_map
from src.structures.presets import get_preset, list_presets

__all__ = [
    "Layer",
    "LayeredStack1D",
    "RodLattice2D",
    "StructureSpec",
    "load_structure",
    "structure_from_dict",
    "build_hexagonal_crystallite",
    "inside_rods",
    "rod_index_at",
    "epsilon_at",
    "epsilon_map",
    "get_preset",
    "list_presets",
]
