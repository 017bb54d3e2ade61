import mpmath
import numpy as np
import pytest

from src.app.core.config import settings
from src.app.core.exceptions import InvalidRadiiError, NoConvergenceError
from src.qnm2d import (
    assemble_ls_operator,
    build_scatterer_mesh,
    cell_kernel,
    evaluate_qnm_field,
    green_matrix,
    normalize_qnm_2d,
    operator_residual,
    qnm_inner_product_2d,
    qnm_inner_products_2d,
    self_cell_integral,
)
from src.qnm2d.operator import background_wavenumber
from src.qnm2d.solver import find_qnm_2d
from src.structures.presets import get_preset

from tests.conftest import COARSE_RESOLUTION


@pytest.fixture(scope="module")
def coarse_mesh(crystallite_n1):
    return build_scatterer_mesh(crystallite_n1, COARSE_RESOLUTION)


def test_mesh_tiles_every_rod(crystallite_n1, coarse_mesh):
    np.testing.assert_allclose(coarse_mesh.rod_areas(), np.pi * crystallite_n1.rod_radius ** 2, rtol=1e-12)
    assert coarse_mesh.rod_index.max() == 5
    offsets = coarse_mesh.centers - crystallite_n1.rod_centers[coarse_mesh.rod_index]
    assert np.all(np.linalg.norm(offsets, axis=1) < crystallite_n1.rod_radius)


def test_mesh_is_mirror_symmetric(coarse_mesh):
    assert np.all(coarse_mesh.mirror_index() >= 0)


def test_mesh_is_cached(crystallite_n1, coarse_mesh):
    assert build_scatterer_mesh(crystallite_n1, COARSE_RESOLUTION) is coarse_mesh


def test_mesh_refines(crystallite_n1):
    coarse = build_scatterer_mesh(crystallite_n1, 4)
    fine = build_scatterer_mesh(crystallite_n1, 8)
    assert fine.size > coarse.size
    assert fine.pixel_size < coarse.pixel_size


@pytest.mark.parametrize("k", [2.7, 2.7 - 0.08j])
def test_self_cell_integral_matches_quadrature(k):
    a = 0.04
    expected = 2 * mpmath.pi * mpmath.quad(lambda r: 0.25j * mpmath.hankel1(0, k * r) * r, [0, a])
    assert self_cell_integral(a, k) == pytest.approx(complex(expected), rel=1e-9)


def test_green_matrix_is_symmetric(coarse_mesh):
    G = green_matrix(coarse_mesh, 2.65 - 0.08j)
    np.testing.assert_allclose(G, G.T, rtol=1e-14)


def test_operator_vanishes_for_homogeneous_lattice():
    lattice = get_preset("homogeneous-2d")
    mesh = build_scatterer_mesh(lattice, 4)
    assert not np.any(assemble_ls_operator(lattice, 2.6, mesh))


def test_operator_undefined_at_zero(crystallite_n1, coarse_mesh):
    with pytest.raises(ValueError):
        assemble_ls_operator(crystallite_n1, 0.0, coarse_mesh)


def test_kernel_at_cell_centers_reproduces_operator(crystallite_n1, coarse_mesh):
    omega = 2.68 - 0.09j
    A = assemble_ls_operator(crystallite_n1, omega, coarse_mesh)
    rows = np.arange(0, coarse_mesh.size, 17)
    kernel = cell_kernel(coarse_mesh.centers[rows], coarse_mesh, background_wavenumber(crystallite_n1, omega))
    weights = omega ** 2 * crystallite_n1.delta_eps * coarse_mesh.areas
    np.testing.assert_allclose(kernel * weights[None, :], A[rows], rtol=1e-12, atol=1e-14)


def test_homogeneous_lattice_has_no_modes():
    with pytest.raises(NoConvergenceError):
        find_qnm_2d(get_preset("homogeneous-2d"), 2.6 - 0.1j, resolution=4)


def test_defect_mode_on_coarse_mesh(coarse_n1_mode):
    nu = coarse_n1_mode.normalized_omega
    assert 0.38 < nu.real < 0.47
    assert -0.05 < nu.imag < 0
    assert coarse_n1_mode.omega.q_factor > 1
    assert operator_residual(coarse_n1_mode) < 1e-6


def test_field_at_cells_matches_stored_values(coarse_n1_mode):
    u = coarse_n1_mode.interior_values
    values = evaluate_qnm_field(coarse_n1_mode, coarse_n1_mode.mesh.centers)
    assert np.linalg.norm(values - u) < 1e-6 * np.linalg.norm(u)


def test_field_evaluation_keeps_shape(coarse_n1_mode):
    points = np.zeros((3, 4, 2))
    points[..., 0] = np.linspace(-2, 2, 4)
    assert coarse_n1_mode.field_at(points).shape == (3, 4)


def test_mode_is_normalized(coarse_n1_mode):
    assert coarse_n1_mode.norm == pytest.approx(1.0, abs=1e-12)
    assert qnm_inner_product_2d(coarse_n1_mode, coarse_n1_mode, coarse_n1_mode.norm_radius) == pytest.approx(
        1.0, abs=1e-10)


def test_norm_nearly_independent_of_radius(coarse_n1_mode):
    norms = qnm_inner_products_2d(coarse_n1_mode, coarse_n1_mode, [3.0, 4.0, 5.0, 6.0])
    np.testing.assert_allclose(norms, 1.0, atol=0.1)


def test_renormalizing_at_another_radius(coarse_n1_mode):
    moved = normalize_qnm_2d(coarse_n1_mode, 5.0)
    assert moved.norm_radius == 5.0
    assert qnm_inner_product_2d(moved, moved, 5.0) == pytest.approx(1.0, abs=1e-10)


def test_norm_radius_must_enclose_crystallite(coarse_n1_mode):
    with pytest.raises(InvalidRadiiError):
        qnm_inner_products_2d(coarse_n1_mode, coarse_n1_mode, [1.0, 2.0])
    with pytest.raises(InvalidRadiiError):
        qnm_inner_products_2d(coarse_n1_mode, coarse_n1_mode, [3.0, 2.5])


def test_defect_mode_through_shift_invert(n1_mode):
    assert n1_mode.mesh.size > settings.DENSE_EIG_LIMIT
    nu = n1_mode.normalized_omega
    assert nu.real == pytest.approx(0.4259, abs=0.005)
    assert nu.imag == pytest.approx(-0.0135, abs=0.003)
    assert not n1_mode.near_degenerate
    assert operator_residual(n1_mode) < 1e-6


def test_defect_frequency_converges_with_mesh(crystallite_n1, n1_mode):
    finer = find_qnm_2d(crystallite_n1, n1_mode.omega.omega, resolution=16)
    assert abs(finer.normalized_omega - n1_mode.normalized_omega) <= 1e-3
