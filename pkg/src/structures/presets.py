from typing import Dict, List, Union

from src.app.core.exceptions import ConfigurationError
from src.structures.models import Layer, LayeredStack1D, RodLattice2D

CRYSTALLITE_ROD_RADIUS = 0.15
CRYSTALLITE_EPS_ROD = 11.4


def _crystallite(name: str, layers: int, eps_rod: float = CRYSTALLITE_EPS_ROD) -> RodLattice2D:
    return RodLattice2D(name=name, a=1.0, rod_radius=CRYSTALLITE_ROD_RADIUS, eps_rod=eps_rod, eps_bg=1.0, layers=layers)


def _slab(name: str, index: float) -> LayeredStack1D:
    return LayeredStack1D(name=name, eps_left=1.0, eps_right=1.0, layers=(Layer(thickness=1.0, eps=index**2),))


_PRESETS: Dict[str, Union[LayeredStack1D, RodLattice2D]] = {
    "paper-2d-crystallite": _crystallite("paper-2d-crystallite", 2),
    "paper-2d-crystallite-N1": _crystallite("paper-2d-crystallite-N1", 1),
    "paper-2d-crystallite-N2": _crystallite("paper-2d-crystallite-N2", 2),
    "paper-2d-crystallite-N3": _crystallite("paper-2d-crystallite-N3", 3),
    "homogeneous-2d": _crystallite("homogeneous-2d", 1, eps_rod=1.0),
    "slab-n2": _slab("slab-n2", 2.0),
    "slab-n3p4": _slab("slab-n3p4", 3.4),
    "slab-n6": _slab("slab-n6", 6.0),
}


def list_presets() -> List[str]:
    return sorted(_PRESETS)


def get_preset(name: str) -> Union[LayeredStack1D, RodLattice2D]:
    try:
        return _PRESETS[name]
    except KeyError:
        raise ConfigurationError(f"unknown preset '{name}'; available: {', '.join(list_presets())}")
