"""Bound formulas, gap profiles, and the block-perturbation reports."""

import math

import numpy as np
import pytest

from specbound import (
    BLOCK1,
    BLOCK2,
    BlockHermitian,
    SingularShiftError,
    eigen_bound_report,
    exact_2x2,
    hermitian_eigen,
    main_bound,
    merge_spectra,
    per_index_gaps,
    quadratic_bound,
    shifted_schur_complement,
    spectral_gap,
    spectral_norm,
    split_hermitian,
    sv_bound_report,
    sv_degenerate_bound,
    svd,
    weyl_bound,
)


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (g + g.conj().T) / 2


# ---------------------------------------------------------------- gaps


def test_spectral_gap_examples():
    assert spectral_gap([5.0, 1.0], [3.0]) == 2.0
    assert spectral_gap([1.0], [1.0]) == 0.0
    with pytest.raises(ValueError):
        spectral_gap([], [1.0])


def test_spectral_gap_matches_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(50):
        v1 = rng.standard_normal(int(rng.integers(1, 8)))
        v2 = rng.standard_normal(int(rng.integers(1, 8)))
        brute = min(abs(x - y) for x in v1 for y in v2)
        assert spectral_gap(v1, v2) == pytest.approx(brute, abs=0.0)


def test_per_index_gaps_enumerated():
    prof = per_index_gaps([5.0, 1.0], [3.0])
    assert np.array_equal(prof.values, [5.0, 3.0, 1.0])
    assert prof.provenance == (BLOCK1, BLOCK2, BLOCK1)
    assert np.array_equal(prof.gaps, [2.0, 2.0, 2.0])
    assert prof.gap == 2.0

    prof = per_index_gaps([4.0, 0.0], [1.0])
    assert np.array_equal(prof.values, [4.0, 1.0, 0.0])
    assert np.array_equal(prof.gaps, [3.0, 1.0, 1.0])
    assert prof.gap == 1.0


def test_per_index_gaps_shared_value():
    prof = per_index_gaps([1.0], [1.0])
    assert np.array_equal(prof.gaps, [0.0, 0.0])
    assert prof.gap == 0.0
    # equal values keep the first-block entry first
    assert prof.provenance == (BLOCK1, BLOCK2)


def test_merge_spectra_stable_ties():
    values, prov = merge_spectra([2.0, 1.0], [2.0, 0.5])
    assert np.array_equal(values, [2.0, 2.0, 1.0, 0.5])
    assert prov == (BLOCK1, BLOCK2, BLOCK1, BLOCK2)


# ------------------------------------------------------- scalar bounds


def test_weyl_bound_examples():
    assert weyl_bound(np.zeros((2, 2))) == 0.0
    assert weyl_bound([[0.1]]) == pytest.approx(0.1, abs=1e-15)
    assert weyl_bound([[3.0, 0.0], [0.0, 4.0]]) == pytest.approx(
        4.0, abs=1e-13)


def test_quadratic_bound_examples():
    assert quadratic_bound(0.1, 2.0) == pytest.approx(0.005)
    assert quadratic_bound(0.1, 0.0) == math.inf
    assert quadratic_bound(1.0, 0.01) == pytest.approx(100.0)


def test_main_bound_examples():
    assert main_bound(0.7, 0.0) == 0.7
    assert main_bound(0.1, 1.0) == pytest.approx(
        0.02 / (1 + math.sqrt(1.04)), rel=1e-15)
    val = main_bound(1.0, 3.0)
    assert val == pytest.approx(2.0 / (3 + math.sqrt(13.0)), rel=1e-15)
    assert val <= min(1.0, 1.0 / 3.0)
    assert main_bound(0.0, 0.0) == 0.0


def test_main_bound_rationalized_identity():
    rng = np.random.default_rng(3)
    for _ in range(300):
        x = 10.0 ** rng.uniform(-8, 3)
        g = 10.0 ** rng.uniform(-8, 3)
        lhs = main_bound(x, g)
        rhs = (math.hypot(g, 2 * x) - g) / 2
        assert lhs == pytest.approx(rhs, rel=1e-14)


def test_main_bound_dominates_classical():
    for x in 10.0 ** np.linspace(-6, 2, 17):
        for g in np.concatenate([[0.0], 10.0 ** np.linspace(-6, 2, 17)]):
            mb = main_bound(x, g)
            assert mb <= x * (1 + 1e-15)
            if g > 0:
                assert mb <= x * x / g * (1 + 1e-15)
            else:
                assert mb == x


def test_main_bound_monotonicity():
    xs = np.linspace(0.0, 5.0, 21)
    gs = np.linspace(0.0, 5.0, 21)
    for g in gs:
        vals = [main_bound(x, g) for x in xs]
        assert np.all(np.diff(vals) >= -1e-15)
    for x in xs:
        vals = [main_bound(x, g) for g in gs]
        assert np.all(np.diff(vals) <= 1e-15)


def test_exact_2x2_examples():
    lp, lm, shift = exact_2x2(1.0, 0.0, 0.1)
    assert lp == pytest.approx(1.0099019513592784, rel=1e-14)
    assert lm == pytest.approx(-0.009901951359278483, rel=1e-12)
    assert shift == pytest.approx(0.009901951359278483, rel=1e-14)
    assert exact_2x2(2.5, -1.0, 0.0) == (2.5, -1.0, 0.0)
    lp, lm, shift = exact_2x2(0.0, 0.0, 0.3)
    assert (lp, lm, shift) == (0.3, -0.3, 0.3)
    # argument order does not matter
    assert exact_2x2(0.0, 1.0, 0.1) == exact_2x2(1.0, 0.0, 0.1)


def test_exact_2x2_matches_eigensolver():
    rng = np.random.default_rng(5)
    for _ in range(200):
        alpha, beta = rng.uniform(-3, 3, size=2)
        eps = rng.uniform(-1, 1)
        lp, lm, _ = exact_2x2(alpha, beta, eps)
        w, _ = hermitian_eigen(np.array([[alpha, eps], [eps, beta]]))
        assert np.allclose(w, [lp, lm], atol=1e-12)


# ------------------------------------------------ block type and split


def test_block_hermitian_shapes():
    blk = BlockHermitian(h1=np.eye(2), h2=np.zeros((3, 3)),
                         e=np.ones((3, 2)))
    assert blk.m == 2 and blk.n == 3
    a = blk.assemble()
    assert np.allclose(a, a.conj().T)
    with pytest.raises(ValueError, match="coupling block"):
        BlockHermitian(h1=np.eye(2), h2=np.eye(3), e=np.ones((2, 3)))


def test_split_round_trip():
    rng = np.random.default_rng(21)
    a = random_hermitian(rng, 6)
    blk = split_hermitian(a, 2)
    assert np.allclose(blk.assemble(), a)
    with pytest.raises(ValueError):
        split_hermitian(a, 0)
    with pytest.raises(ValueError):
        split_hermitian(a, 6)


# --------------------------------------------------- Schur complement


def test_schur_complement_zero_coupling():
    blk = BlockHermitian(h1=np.diag([2.0, 1.0]), h2=np.diag([0.0]),
                         e=np.zeros((1, 2)))
    m = shifted_schur_complement(blk, 5.0)
    assert np.allclose(m, np.diag([-3.0, -4.0]))


def test_schur_complement_2x2_closed_form():
    lam_plus, _, _ = exact_2x2(1.0, 0.0, 0.1)
    blk = BlockHermitian(h1=[[1.0]], h2=[[0.0]], e=[[0.1]])
    m = shifted_schur_complement(blk, lam_plus)
    assert abs(m[0, 0]) < 1e-12


def test_schur_complement_inertia_at_top_eigenvalue():
    rng = np.random.default_rng(3)
    h1 = random_hermitian(rng, 4)
    h2 = random_hermitian(rng, 3) - 2.0 * np.eye(3)  # push spectra apart
    e = 0.05 * (rng.standard_normal((3, 4))
                + 1j * rng.standard_normal((3, 4)))
    blk = BlockHermitian(h1=h1, h2=h2, e=e)
    a = blk.assemble()
    lam1 = hermitian_eigen(a)[0][0]
    w1 = hermitian_eigen(blk.h1)[0]
    w2 = hermitian_eigen(blk.h2)[0]
    assert lam1 > max(w1[0], w2[0])  # strictly above both blocks
    m = shifted_schur_complement(blk, lam1)
    top = hermitian_eigen(m)[0][0]
    assert abs(top) <= 1e-9 * spectral_norm(a)


def test_schur_complement_rejects_singular_shift():
    blk = BlockHermitian(h1=[[1.0]], h2=[[0.0]], e=[[0.1]])
    with pytest.raises(SingularShiftError):
        shifted_schur_complement(blk, 1e-14)


# -------------------------------------------------------- eigen report


def test_eigen_report_zero_coupling():
    blk = BlockHermitian(h1=np.diag([3.0, 1.0]), h2=np.diag([2.0]),
                         e=np.zeros((1, 2)))
    rep = eigen_bound_report(blk, run_oracle=True)
    assert rep.coupling_norm == 0.0
    assert np.array_equal(rep.main_i, np.zeros(3))
    assert np.array_equal(rep.quadratic_i, np.zeros(3))
    assert rep.main_global == 0.0
    assert np.allclose(rep.true_diff, 0.0, atol=1e-13)


def test_eigen_report_1_plus_1_is_tight():
    blk = BlockHermitian(h1=[[1.0]], h2=[[0.0]], e=[[0.1]])
    rep = eigen_bound_report(blk, run_oracle=True)
    shift = exact_2x2(1.0, 0.0, 0.1)[2]
    assert np.allclose(rep.main_i, shift, rtol=1e-12)
    assert np.allclose(rep.true_diff, shift, atol=1e-12)


def test_eigen_report_ordering_chain():
    rng = np.random.default_rng(17)
    h1 = random_hermitian(rng, 5)
    h2 = random_hermitian(rng, 4)
    e = 1e-2 * (rng.standard_normal((4, 5))
                + 1j * rng.standard_normal((4, 5)))
    rep = eigen_bound_report(BlockHermitian(h1=h1, h2=h2, e=e),
                             run_oracle=True)
    tol = 1e-9 * (1 + np.abs(rep.eigenvalues).max())
    for i in range(rep.dim):
        assert rep.true_diff[i] <= rep.main_i[i] + tol
        assert rep.main_i[i] <= rep.main_global + tol
    assert rep.main_global <= rep.weyl + tol


def test_eigen_report_gap_floor_flags_quadratic():
    # two nearly-shared eigenvalues: gap far below noise scale
    blk = BlockHermitian(h1=[[1.0]], h2=[[1.0 + 1e-16]], e=[[0.05]])
    rep = eigen_bound_report(blk)
    assert np.all(np.isinf(rep.quadratic_i))
    # the gap-aware bound keeps using the raw gap
    assert np.all(np.isfinite(rep.main_i))


# ----------------------------------------------- singular value report


def test_sv_report_zero_coupling():
    rep = sv_bound_report([[2.0]], [[0.0]], [[0.0]], [[1.0]],
                          run_oracle=True)
    assert rep.coupling_norm == 0.0
    assert np.array_equal(rep.main_i, np.zeros(2))
    assert np.allclose(rep.true_diff, 0.0, atol=1e-13)


def test_sv_report_1_plus_1_example():
    rep = sv_bound_report([[2.0]], [[0.1]], [[0.1]], [[1.0]],
                          run_oracle=True)
    assert rep.coupling_norm == pytest.approx(0.1, abs=1e-14)
    assert rep.gap == pytest.approx(1.0, abs=1e-13)
    assert rep.main_global == pytest.approx(
        0.02 / (1 + math.sqrt(1.04)), rel=1e-10)
    assert np.all(rep.true_diff <= rep.main_i + 1e-12)


def test_sv_report_random_property():
    rng = np.random.default_rng(23)
    g1 = rng.standard_normal((2, 2))
    g2 = rng.standard_normal((2, 2))
    e1 = 0.1 * rng.standard_normal((2, 2))
    e2 = 0.1 * rng.standard_normal((2, 2))
    rep = sv_bound_report(g1, e1, e2, g2, run_oracle=True)
    tol = 1e-9 * (1 + rep.sigmas[0])
    assert np.all(rep.true_diff <= rep.main_i + tol)


def test_sv_report_zero_tail_for_ragged_split():
    # B is 3x5: two singular values of the split and of B must vanish
    rng = np.random.default_rng(29)
    g1 = rng.standard_normal((1, 4))
    g2 = rng.standard_normal((2, 1))
    e1 = 0.2 * rng.standard_normal((1, 1))
    e2 = 0.2 * rng.standard_normal((2, 4))
    rep = sv_bound_report(g1, e1, e2, g2, run_oracle=True)
    assert rep.bounded_count == 3
    assert rep.block_sigmas.size == 5
    assert rep.tail_defect() <= 1e-10


def test_sv_report_rejects_empty_blocks():
    with pytest.raises(ValueError, match="degenerate"):
        sv_bound_report(np.empty((0, 2)), np.empty((0, 3)),
                        np.ones((2, 2)), np.ones((2, 3)))


def test_sv_report_rejects_nonconformal():
    with pytest.raises(ValueError, match="coupling blocks"):
        sv_bound_report([[1.0]], [[0.1, 0.2]], [[0.1]], [[1.0]])


def test_sv_degenerate_examples():
    assert sv_degenerate_bound(0.0, 0.5) == pytest.approx(0.5, rel=1e-15)
    assert sv_degenerate_bound(2.0, 0.0) == 0.0
    bound = sv_degenerate_bound(1.0, 0.1)
    assert bound == pytest.approx(0.02 / (2 + math.sqrt(1.04)), rel=1e-14)
    # one-row anchor: singular value of [1, 0.1] is sqrt(1.01)
    diff = math.sqrt(1.01) - 1.0
    assert diff == pytest.approx(0.0049876, abs=1e-7)
    assert diff <= bound
    assert bound == pytest.approx(0.0066229, abs=1e-7)


def test_sv_degenerate_vs_svd_oracle():
    rng = np.random.default_rng(31)
    for _ in range(50):
        p, q, extra = (int(x) for x in rng.integers(1, 5, size=3))
        g = rng.standard_normal((p, q)) + 1j * rng.standard_normal((p, q))
        e = 0.3 * (rng.standard_normal((p, extra))
                   + 1j * rng.standard_normal((p, extra)))
        sb = svd(g)[0]
        sf = svd(np.hstack([g, e]))[0]
        norm_e = spectral_norm(e)
        for i in range(min(p, q)):
            assert abs(sf[i] - sb[i]) <= sv_degenerate_bound(
                sb[i], norm_e) + 1e-10
