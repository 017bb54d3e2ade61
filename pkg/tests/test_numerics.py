import mpmath
import numpy as np
import pytest
from scipy import special

import src.numerics.eigen as eigen_module

from src.app.core.exceptions import EigenSolveError, NoConvergenceError, SpecialFunctionDomainError, SpuriousRootError
from src.numerics import (
    ComplexFrequency,
    bessel_j0,
    bessel_y0,
    circle_rule,
    dense_eigensolve,
    find_root_complex,
    gauss_legendre,
    gauss_legendre_panels,
    hankel0_first_kind,
    hankel1_first_kind,
    nearest_eigenpairs,
    panel_edges,
    polar_disk_rule,
)

ARGUMENTS = [0.3, 2.7, 10.0, 2.6 - 0.08j, 5.0 - 0.5j, 0.05 - 0.01j, 30.0 - 1.0j]


@pytest.mark.parametrize("z", ARGUMENTS)
def test_hankel_matches_mpmath(z):
    expected0 = complex(mpmath.hankel1(0, mpmath.mpc(z)))
    expected1 = complex(mpmath.hankel1(1, mpmath.mpc(z)))
    assert hankel0_first_kind(z) == pytest.approx(expected0, rel=1e-10)
    assert hankel1_first_kind(z) == pytest.approx(expected1, rel=1e-10)


@pytest.mark.parametrize("z", [0.4, 3.3 - 0.2j])
def test_bessel_matches_mpmath(z):
    assert bessel_j0(z) == pytest.approx(complex(mpmath.besselj(0, mpmath.mpc(z))), rel=1e-12)
    assert bessel_y0(z) == pytest.approx(complex(mpmath.bessely(0, mpmath.mpc(z))), rel=1e-10)


def test_hankel_large_argument_expansion():
    z = 10.0
    leading = np.sqrt(2 / (np.pi * z)) * np.exp(1j * (z - np.pi / 4))
    assert hankel0_first_kind(z) == pytest.approx(leading * (1 - 1j / (8 * z)), rel=1e-3)


def test_hankel_small_argument_logarithm():
    z = 1e-6
    expected = 1 + 2j / np.pi * (np.log(z / 2) + np.euler_gamma)
    assert hankel0_first_kind(z) == pytest.approx(expected, rel=1e-10)


def test_hankel_singular_at_zero():
    with pytest.raises(SpecialFunctionDomainError):
        hankel0_first_kind(0.0)
    with pytest.raises(SpecialFunctionDomainError):
        hankel1_first_kind(np.array([1.0, 0.0]))


@pytest.mark.parametrize("z", [0.7, 4.2, 2.6 - 0.08j, 9.0 - 1.5j])
def test_hankel_wronskian(z):
    wronskian = special.jv(1, z) * hankel0_first_kind(z) - bessel_j0(z) * hankel1_first_kind(z)
    assert wronskian == pytest.approx(2j / (np.pi * z), rel=1e-10)


@pytest.mark.parametrize("z", [1.3, 5.0, 2.6 - 0.08j, 0.4 + 0.3j])
def test_hankel_conjugation(z):
    # H0(conj z) = conj(H0^(2)(z)) with H0^(2) = 2 J0 - H0
    second_kind = 2 * bessel_j0(z) - hankel0_first_kind(z)
    assert hankel0_first_kind(np.conj(z)) == pytest.approx(np.conj(second_kind), rel=1e-10)


def test_hankel_vectorized():
    z = np.array([[1.0, 2.0], [3.0 - 0.1j, 4.0]])
    values = hankel0_first_kind(z)
    assert values.shape == (2, 2)
    assert values[1, 0] == pytest.approx(hankel0_first_kind(3.0 - 0.1j))


def test_newton_finds_complex_root():
    root = find_root_complex(lambda z: z ** 2 + 1, 0.5 + 0.5j)
    assert root == pytest.approx(1j, abs=1e-12)


def test_newton_started_on_a_root_stays_there():
    f = lambda z: z ** 2 + 1
    assert find_root_complex(f, 1j, max_iter=1) == 1j
    polished = find_root_complex(f, 0.3 + 0.9j)
    assert find_root_complex(f, polished) == polished


def test_newton_linear_function_one_step():
    root = find_root_complex(lambda z: 3 * z - (1 - 2j), 10.0, tol=1e-8, max_iter=1)
    assert root == pytest.approx((1 - 2j) / 3, abs=1e-8)


def test_newton_reports_last_iterate():
    with pytest.raises(NoConvergenceError) as info:
        find_root_complex(np.exp, 0.0, max_iter=5)
    assert info.value.iterations == 5
    assert info.value.last_iterate == pytest.approx(-5.0, abs=1e-5)
    assert info.value.residual == pytest.approx(np.exp(-5.0), rel=1e-4)


def test_newton_rejects_nonpositive_tolerance():
    with pytest.raises(ValueError):
        find_root_complex(lambda z: z, 1.0, tol=0.0)


def test_complex_frequency():
    omega = ComplexFrequency.accepted(2.0 - 0.01j)
    assert omega.q_factor == pytest.approx(100.0)
    assert omega.normalized == pytest.approx((2.0 - 0.01j) / (2 * np.pi))
    assert ComplexFrequency.from_normalized(omega.normalized).omega == pytest.approx(omega.omega)


@pytest.mark.parametrize("root", [1.0 + 0.1j, 1.0, -1.0 - 0.1j])
def test_complex_frequency_rejects_spurious_roots(root):
    with pytest.raises(SpuriousRootError):
        ComplexFrequency.accepted(root)


def test_dense_eigensolve_sorted_by_target():
    A = np.diag([3.0, 1.1, -2.0, 0.95 + 0.01j])
    pairs = dense_eigensolve(A, target=1.0)
    assert pairs[0].value == pytest.approx(0.95 + 0.01j)
    assert pairs[1].value == pytest.approx(1.1)
    for pair in pairs:
        np.testing.assert_allclose(A @ pair.vector, pair.value * pair.vector, atol=1e-12)


def test_dense_eigensolve_rejects_bad_input():
    with pytest.raises(EigenSolveError):
        dense_eigensolve(np.ones((2, 3)))
    with pytest.raises(EigenSolveError):
        dense_eigensolve(np.array([[1.0, np.nan], [0.0, 1.0]]))


def test_nearest_eigenpairs_small_matrix():
    A = np.diag([0.2, 0.9, 1.3, 4.0])
    pairs = nearest_eigenpairs(A, target=1.0, count=2)
    assert [p.value for p in pairs] == pytest.approx([0.9, 1.3])


def test_nearest_eigenpairs_shift_invert():
    rng = np.random.default_rng(7)
    n = 500
    values = np.arange(n) / 100 + 0.005j
    Q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    A = Q @ np.diag(values) @ Q.T
    pairs = nearest_eigenpairs(A, target=1.0, count=2)
    assert pairs[0].value == pytest.approx(1.0 + 0.005j, abs=1e-8)


def test_gauss_legendre_exact_for_polynomials():
    x, w = gauss_legendre(-1.0, 2.0, 4)
    assert np.sum(w * x ** 7) == pytest.approx((2.0 ** 8 - 1.0) / 8, rel=1e-13)


def test_panel_edges_keep_anchors():
    edges = panel_edges(0.0, 3.0, 0.7, include=[1.25, 2.0, 5.0])
    assert 1.25 in edges and 2.0 in edges
    assert edges[0] == 0.0 and edges[-1] == 3.0
    assert np.all(np.diff(edges) <= 0.7 + 1e-12)


def test_composite_rule_integrates_kink():
    edges = panel_edges(-1.0, 1.0, 0.5, include=[0.3])
    x, w, panels = gauss_legendre_panels(edges, 8)
    assert np.sum(w * np.abs(x - 0.3)) == pytest.approx((1.3 ** 2 + 0.7 ** 2) / 2, rel=1e-13)
    assert panels.max() == edges.size - 2


def test_disk_rule_areas():
    rule = polar_disk_rule(3.0, k=2.0, include=[1.2, 2.5])
    assert rule.integrate(np.ones(rule.weights.size)) == pytest.approx(9 * np.pi, rel=1e-12)
    cumulative = rule.cumulative(np.ones(rule.weights.size))
    index = list(rule.edges[1:]).index(1.2)
    assert cumulative[index] == pytest.approx(np.pi * 1.2 ** 2, rel=1e-12)
    r2 = np.sum(rule.points ** 2, axis=1)
    assert rule.integrate(r2) == pytest.approx(np.pi * 3.0 ** 4 / 2, rel=1e-12)
    assert np.count_nonzero(rule.up_to(2.5)) < rule.weights.size


def test_circle_rule_length():
    points, weights = circle_rule(2.0, 64)
    assert np.sum(weights) == pytest.approx(4 * np.pi)
    np.testing.assert_allclose(np.linalg.norm(points, axis=1), 2.0)


def shifted_spectrum_matrix(values: np.ndarray, seed: int = 11) -> np.ndarray:
    rng = np.random.default_rng(seed)
    Q, _ = np.linalg.qr(rng.standard_normal((values.size, values.size)))
    return Q @ np.diag(values) @ Q.T


def test_nearest_eigenpairs_with_eigenvalue_on_the_target(monkeypatch):
    values = np.concatenate([[1.0, 1.0005 - 0.0002j], np.linspace(2.0, 6.0, 448)])
    A = shifted_spectrum_matrix(values)

    def no_dense(*args, **kwargs):
        raise AssertionError("Arnoldi pairs should pass the residual check")

    monkeypatch.setattr(eigen_module, "dense_eigensolve", no_dense)
    pairs = nearest_eigenpairs(A, target=1.0, count=2)
    assert pairs[0].value == pytest.approx(1.0, abs=1e-10)
    assert pairs[1].value == pytest.approx(1.0005 - 0.0002j, abs=1e-10)
    for pair in pairs:
        assert np.linalg.norm(A @ pair.vector - pair.value * pair.vector) < 1e-10 * np.linalg.norm(A)


def test_nearest_eigenpairs_falls_back_to_dense(monkeypatch):
    values = np.concatenate([[0.9 + 0.01j], np.linspace(2.0, 6.0, 449)])
    A = shifted_spectrum_matrix(values)

    def inaccurate_eigs(A, k, **kwargs):
        return np.ones(k, dtype=complex), np.eye(A.shape[0], k, dtype=complex)

    monkeypatch.setattr(eigen_module, "eigs", inaccurate_eigs)
    pairs = nearest_eigenpairs(A, target=1.0, count=1)
    assert pairs[0].value == pytest.approx(0.9 + 0.01j, abs=1e-10)
