import numpy as np
import pytest

from src.qnm1d.solver import find_qnm_1d
from src.qnm1d.transfer import fabry_perot_frequency
from src.qnm2d.solver import find_qnm_2d
from src.structures.presets import get_preset

COARSE_RESOLUTION = 6
# 528 cells for one ring: above DENSE_EIG_LIMIT, so the Arnoldi path is taken
ARNOLDI_RESOLUTION = 10


@pytest.fixture(scope="session")
def exact_frequency():
    return fabry_perot_frequency


@pytest.fixture(scope="session")
def slab_n2():
    return get_preset("slab-n2")


@pytest.fixture(scope="session")
def slab_mode_m1(slab_n2):
    return find_qnm_1d(slab_n2, 1.5 - 0.5j)


@pytest.fixture(scope="session")
def slab_mode_m2(slab_n2):
    return find_qnm_1d(slab_n2, 3.1 - 0.5j)


@pytest.fixture(scope="session")
def crystallite_n1():
    return get_preset("paper-2d-crystallite-N1")


@pytest.fixture(scope="session")
def coarse_n1_mode(crystallite_n1):
    """Defect mode of the one-ring crystallite on a coarse mesh: fast, not accurate."""
    return find_qnm_2d(crystallite_n1, 2 * np.pi * (0.426 - 0.0135j), resolution=COARSE_RESOLUTION)


@pytest.fixture(scope="session")
def n1_mode(crystallite_n1):
    return find_qnm_2d(crystallite_n1, 2 * np.pi * (0.4259 - 0.0135j), resolution=ARNOLDI_RESOLUTION)
