"""Lanczos iteration and Ritz-pair extraction."""

import numpy as np
import pytest

from specbound import (
    certify,
    frobenius,
    hermitian_eigen,
    lanczos,
    rayleigh_quotient,
    ritz_subspace,
    spectral_norm,
)


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


def test_two_steps_capture_a_two_point_spectrum():
    state = lanczos(np.diag([1.0, 2.0]), 2, seed=3)
    w = np.sort(np.linalg.eigvalsh(state.tridiagonal()))
    assert np.allclose(w, [1.0, 2.0], atol=1e-12)


def test_single_step_alpha_is_rayleigh_quotient():
    rng = np.random.default_rng(1)
    a = random_hermitian(rng, 9)
    state = lanczos(a, 1, seed=7)
    q0 = state.q[:, 0]
    assert state.steps == 1
    assert state.beta.size == 0
    assert state.alpha[0] == pytest.approx(
        (q0.conj() @ a @ q0).real, abs=1e-13)


def test_basis_orthonormal_and_projection_matches():
    rng = np.random.default_rng(4)
    a = random_hermitian(rng, 30)
    state = lanczos(a, 12, seed=11)
    k = state.steps
    assert k == 12
    gram = state.q.conj().T @ state.q
    assert np.linalg.norm(gram - np.eye(k)) < k * 1e-10
    t = state.tridiagonal()
    proj = state.q.conj().T @ a @ state.q
    assert np.linalg.norm(t - proj) < 1e-9 * frobenius(a)
    assert np.all(state.beta > 0)
    # strictly tridiagonal: everything two off the diagonal vanishes
    assert np.allclose(np.triu(t, 2), 0.0)


def test_ritz_values_interlace_with_step_count():
    rng = np.random.default_rng(6)
    a = random_hermitian(rng, 20)
    small = np.sort(np.linalg.eigvalsh(lanczos(a, 7, seed=2).tridiagonal()))
    big = np.sort(np.linalg.eigvalsh(lanczos(a, 8, seed=2).tridiagonal()))
    # same seed means the 7-step basis is a prefix of the 8-step one, so
    # Cauchy interlacing applies: big[i] <= small[i] <= big[i+1]
    for i in range(7):
        assert big[i] <= small[i] + 1e-10
        assert small[i] <= big[i + 1] + 1e-10


def test_early_termination_on_identity():
    state = lanczos(np.eye(8), 5, seed=0)
    assert state.steps == 1
    assert state.alpha[0] == pytest.approx(1.0, abs=1e-14)


def test_early_termination_on_two_point_spectrum():
    # any start vector lives in the sum of two eigenspaces, so the
    # Krylov space closes after two steps
    a = np.diag([1.0, 1.0, 1.0, 2.0, 2.0])
    state = lanczos(a, 5, seed=9)
    assert state.steps == 2
    w = np.sort(np.linalg.eigvalsh(state.tridiagonal()))
    assert np.allclose(w, [1.0, 2.0], atol=1e-12)


def test_seed_controls_start_vector():
    rng = np.random.default_rng(13)
    a = random_hermitian(rng, 10)
    s1 = lanczos(a, 4, seed=5)
    s2 = lanczos(a, 4, seed=5)
    s3 = lanczos(a, 4, seed=6)
    assert np.array_equal(s1.q, s2.q)
    assert not np.allclose(s1.q[:, 0], s3.q[:, 0])


def test_step_count_validation():
    a = np.eye(3)
    with pytest.raises(ValueError):
        lanczos(a, 0)
    with pytest.raises(ValueError):
        lanczos(a, 4)


def test_ritz_subspace_default_takes_extremes():
    rng = np.random.default_rng(8)
    a = random_hermitian(rng, 25)
    state = lanczos(a, 10, seed=1)
    theta = np.sort(np.linalg.eigvalsh(state.tridiagonal()))[::-1]
    sub = ritz_subspace(state, 4)
    assert sub.m == 4 and sub.dim == 25
    assert np.allclose(sub.ritz_values,
                       [theta[0], theta[1], theta[8], theta[9]], atol=1e-11)
    assert np.allclose(sub.h1, np.diag(sub.ritz_values), atol=1e-12)


def test_ritz_subspace_full_handover():
    rng = np.random.default_rng(10)
    a = random_hermitian(rng, 15)
    state = lanczos(a, 6, seed=4)
    sub = ritz_subspace(state, 6)
    theta = np.sort(np.linalg.eigvalsh(state.tridiagonal()))[::-1]
    assert np.allclose(sub.ritz_values, theta, atol=1e-11)
    h = rayleigh_quotient(a, sub.x1)
    assert np.allclose(h, np.diag(sub.ritz_values), atol=1e-9)


def test_ritz_subspace_explicit_indices():
    rng = np.random.default_rng(12)
    a = random_hermitian(rng, 18)
    state = lanczos(a, 7, seed=3)
    theta = np.sort(np.linalg.eigvalsh(state.tridiagonal()))[::-1]
    sub = ritz_subspace(state, 2, indices=[5, 3])
    assert np.allclose(sub.ritz_values, theta[[3, 5]], atol=1e-11)


def test_ritz_subspace_validates_selection():
    state = lanczos(np.diag([3.0, 2.0, 1.0]), 3, seed=0)
    with pytest.raises(ValueError):
        ritz_subspace(state, 0)
    with pytest.raises(ValueError):
        ritz_subspace(state, 4)
    with pytest.raises(ValueError):
        ritz_subspace(state, 2, indices=[1, 1])
    with pytest.raises(ValueError):
        ritz_subspace(state, 2, indices=[0, 3])


def test_certifier_consumes_lanczos_output():
    rng = np.random.default_rng(15)
    a = random_hermitian(rng, 24)
    sub = ritz_subspace(lanczos(a, 9, seed=2), 3)
    rep = certify(a, sub.x1, run_oracle=True)
    tol = 1e-9 * (1 + spectral_norm(a))
    assert rep.m == 3
    assert np.allclose(rep.ritz_values, sub.ritz_values, atol=1e-10)
    assert rep.coupling_norm == pytest.approx(rep.residual_norm, abs=tol)
    assert np.all(rep.true_errors <= rep.whole_bounds + tol)


def test_converged_extremes_get_tiny_certified_bounds():
    # spectrum with detached endpoints: the extreme Ritz pairs converge
    # long before the interior ones, and the per-column route sees it
    n = 60
    diag = np.concatenate([[0.0], np.linspace(20.0, 40.0, n - 2), [60.0]])
    rng = np.random.default_rng(33)
    v = np.linalg.qr(rng.standard_normal((n, n)))[0]
    a = v @ np.diag(diag) @ v.T
    sub = ritz_subspace(lanczos(a, 20, seed=5), 4)
    rep = certify(a, sub.x1, run_oracle=True)
    # ritz values sorted descending: positions 0/-1 are the endpoints
    assert rep.per_column_bounds[0] < 1e-8
    assert rep.per_column_bounds[-1] < 1e-8
    assert np.all(rep.true_errors <= rep.per_column_bounds + 1e-9)
    eigvals = hermitian_eigen(a)[0]
    assert abs(rep.ritz_values[0] - eigvals[0]) < 1e-8
    assert abs(rep.ritz_values[-1] - eigvals[-1]) < 1e-8
