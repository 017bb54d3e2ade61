import mpmath
import numpy as np
import pytest

from src.app.core.exceptions import CoincidentPointError, ConfigurationError, ProbeLocationError
from src.greens import (
    FullGreensSolver,
    LdosSpectrum,
    check_probe,
    greens_background_1d,
    greens_background_2d,
    greens_full_1d,
    greens_full_2d,
    ldos_enhancement,
    ldos_enhancement_1d,
    ldos_spectrum,
    single_mode_ldos,
    spectrum_frequencies,
)
from src.modevol.volumes import complex_mode_volume
from src.numerics.frequency import ComplexFrequency
from src.qnm2d.mesh import build_scatterer_mesh
from src.qnm2d.solver import find_qnm_2d
from src.structures.lattice import build_hexagonal_crystallite
from src.structures.models import Layer, LayeredStack1D
from src.structures.presets import get_preset

from tests.conftest import COARSE_RESOLUTION


def slab_centre_ldos(index: float):
    """Full and single-mode LDOS at the centre of a bare slab on its second resonance."""
    gamma = np.log((index + 1) / (index - 1))
    single = 8 * np.pi ** 2 / (gamma * (4 * np.pi ** 2 + gamma ** 2))
    return index, single


def test_background_2d_imaginary_part_at_coincidence():
    assert greens_background_2d((0.5, 0.5), (0.5, 0.5), 2.6, imag_only=True) == 0.25j
    with pytest.raises(CoincidentPointError):
        greens_background_2d((0.5, 0.5), (0.5, 0.5), 2.6)


def test_background_2d_matches_hankel():
    expected = 0.25j * complex(mpmath.hankel1(0, 2.0 * 0.5))
    assert greens_background_2d((0.0, 0.0), (0.3, 0.4), 2.0) == pytest.approx(expected, rel=1e-10)
    scaled = 0.25j * complex(mpmath.hankel1(0, 2.0 * np.sqrt(2.25) * 0.5))
    assert greens_background_2d((0.0, 0.0), (0.3, 0.4), 2.0, eps_B=2.25) == pytest.approx(scaled, rel=1e-10)


def test_background_1d_is_outgoing():
    omega = 1.3
    assert greens_background_1d(0.2, 0.2, omega) == pytest.approx(1j / (2 * omega))
    assert greens_background_1d(-1.0, 1.0, omega) == pytest.approx(1j * np.exp(2j * omega) / (2 * omega))


def test_full_1d_reduces_to_background_without_contrast():
    stack = LayeredStack1D(name="air", eps_left=1.0, eps_right=1.0, layers=(Layer(thickness=1.0, eps=1.0),))
    for x, x_prime in [(0.2, 0.7), (-0.5, 0.3), (1.4, 0.1)]:
        assert greens_full_1d(stack, x, x_prime, 2.2) == pytest.approx(greens_background_1d(x, x_prime, 2.2), rel=1e-9)


def test_full_1d_is_reciprocal(slab_n2):
    assert greens_full_1d(slab_n2, 0.2, 0.9, 1.7) == pytest.approx(greens_full_1d(slab_n2, 0.9, 0.2, 1.7), rel=1e-10)


@pytest.mark.parametrize("index", [2.0, 3.4, 6.0])
def test_slab_centre_ldos_on_resonance(index, exact_frequency):
    stack = get_preset({2.0: "slab-n2", 3.4: "slab-n3p4", 6.0: "slab-n6"}[index])
    full, _ = slab_centre_ldos(index)
    omega = exact_frequency(index, 2).real
    assert ldos_enhancement_1d(stack, 0.5, omega) == pytest.approx(full, rel=1e-8)


def test_slab_single_mode_ldos(slab_mode_m2):
    _, expected = slab_centre_ldos(2.0)
    assert single_mode_ldos(slab_mode_m2, 0.5, slab_mode_m2.omega.real) == pytest.approx(expected, rel=1e-8)


def test_single_mode_discrepancy_shrinks_with_q(exact_frequency):
    ratios = []
    for index in (2.0, 3.4, 6.0):
        full, single = slab_centre_ldos(index)
        ratios.append(abs(single / full - 1))
    assert ratios == sorted(ratios, reverse=True)
    assert ratios[-1] < 0.02


def test_single_mode_identity_2d(coarse_n1_mode):
    omega = coarse_n1_mode.omega
    v_q = complex_mode_volume(coarse_n1_mode, (0.0, 0.0))
    expected = 4 * omega.q_factor / omega.real * (1 / (v_q * omega.omega)).real
    assert single_mode_ldos(coarse_n1_mode, (0.0, 0.0), omega.real) == pytest.approx(expected, rel=1e-10)


def test_homogeneous_lattice_ldos_is_one():
    lattice = get_preset("homogeneous-2d")
    mesh = build_scatterer_mesh(lattice, 4)
    assert ldos_enhancement(lattice, (0.0, 0.0), 2.6, mesh) == 1.0
    assert FullGreensSolver(lattice, 2.6, mesh).scattered((0.1, 0.2), (0.3, 0.0)) == 0


def test_full_2d_is_reciprocal(crystallite_n1):
    mesh = build_scatterer_mesh(crystallite_n1, COARSE_RESOLUTION)
    solver = FullGreensSolver(crystallite_n1, 2 * np.pi * 0.42, mesh)
    a, b = (0.3, 0.1), (-0.2, 0.4)
    np.testing.assert_allclose(solver.greens(a, b), solver.greens(b, a), rtol=1e-8)


def test_full_2d_tends_to_background_for_weak_rods():
    omega = 2 * np.pi * 0.42
    a, b = (0.3, 0.1), (-0.2, 0.4)
    background = greens_background_2d(a, b, omega)
    scattered = []
    for contrast in (1e-6, 2e-6):
        lattice = build_hexagonal_crystallite(1, 1.0, 0.15, 1.0 + contrast)
        mesh = build_scatterer_mesh(lattice, COARSE_RESOLUTION)
        full = greens_full_2d(lattice, a, b, omega, mesh)
        assert abs(full - background) < 1e-4 * abs(background)
        scattered.append(full - background)
    # first Born order: the scattered part is linear in the contrast
    assert scattered[1] == pytest.approx(2 * scattered[0], rel=1e-4)


def test_full_2d_needs_real_positive_frequency(crystallite_n1):
    mesh = build_scatterer_mesh(crystallite_n1, COARSE_RESOLUTION)
    with pytest.raises(ConfigurationError):
        FullGreensSolver(crystallite_n1, 2.6 - 0.1j, mesh)
    with pytest.raises(ConfigurationError):
        FullGreensSolver(crystallite_n1, -2.6, mesh)


def test_probe_inside_rod_is_rejected(crystallite_n1):
    with pytest.raises(ProbeLocationError):
        check_probe(crystallite_n1, (1.0, 0.0))
    with pytest.raises(ProbeLocationError):
        check_probe(crystallite_n1, (1.0, 0.0, 0.0))
    np.testing.assert_array_equal(check_probe(crystallite_n1, (0.0, 0.0)), [0.0, 0.0])


def test_spectrum_window():
    grid = spectrum_frequencies(ComplexFrequency(1.0 - 0.1j), points=5, half_width=10)
    np.testing.assert_allclose(grid, [0.0, 0.5, 1.0, 1.5, 2.0])


def test_lorentzian_width():
    frequencies = np.linspace(0, 2, 201)
    spectrum = LdosSpectrum(
        probe=np.zeros(2),
        frequencies=frequencies,
        enhancement_full=1 / (1 + ((frequencies - 1) / 0.1) ** 2),
    )
    assert spectrum.peak_frequency == pytest.approx(1.0)
    assert spectrum.full_width_half_maximum() == pytest.approx(0.2, rel=1e-2)
    assert np.all(np.isnan(spectrum.enhancement_single))


def test_spectrum_columns_must_match():
    with pytest.raises(ValueError):
        LdosSpectrum(probe=np.zeros(2), frequencies=np.arange(3.0), enhancement_full=np.ones(4))


def test_slab_spectrum_peaks_on_resonance(slab_n2, slab_mode_m2):
    frequencies = spectrum_frequencies(slab_mode_m2.omega, points=41, half_width=1.0)
    spectrum = ldos_spectrum(slab_n2, 0.5, frequencies, mode=slab_mode_m2)
    assert spectrum.peak_frequency == pytest.approx(np.pi, abs=frequencies[1] - frequencies[0])
    assert np.all(np.isfinite(spectrum.enhancement_single))
    assert np.all(spectrum.enhancement_full > 0)


@pytest.mark.parametrize("nu", [0.25, 0.42, 0.6])
def test_full_2d_is_passive(crystallite_n1, nu):
    mesh = build_scatterer_mesh(crystallite_n1, COARSE_RESOLUTION)
    solver = FullGreensSolver(crystallite_n1, 2 * np.pi * nu, mesh)
    for probe in [(0.0, 0.0), (0.4, -0.2), (1.5, 0.0), (2.5, 1.0)]:
        assert solver.greens(probe, probe, imag_only=True).imag >= 0
        assert solver.ldos(probe) >= 0


@pytest.fixture(scope="module")
def coarse_n2_mode():
    lattice = get_preset("paper-2d-crystallite-N2")
    return find_qnm_2d(lattice, 2 * np.pi * (0.4218 - 0.0013j), resolution=COARSE_RESOLUTION)


def test_crystallite_ldos_peak_matches_mode(coarse_n2_mode):
    omega = coarse_n2_mode.omega
    frequencies = spectrum_frequencies(omega, points=81, half_width=4.0)
    spectrum = ldos_spectrum(coarse_n2_mode.lattice, (0.0, 0.0), frequencies, mesh=coarse_n2_mode.mesh)
    assert abs(spectrum.peak_frequency - omega.real) <= abs(omega.imag)
    assert spectrum.full_width_half_maximum() == pytest.approx(2 * abs(omega.imag), rel=0.3)
