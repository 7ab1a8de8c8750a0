"""Seeded instance generators."""

import numpy as np
import pytest

from specbound import (
    CLUSTERED,
    ENSEMBLES,
    GAUSSIAN,
    SHARED,
    GeneratorSpec,
    generate,
    hermitian_eigen,
    mix_seed,
    random_unitary,
    rng_from_seed,
    spectral_gap,
    spectral_norm,
)


def test_generate_is_deterministic():
    spec = GeneratorSpec(m=3, n=4, seed=987)
    a = generate(spec)
    b = generate(spec)
    assert np.array_equal(a.h1, b.h1)
    assert np.array_equal(a.h2, b.h2)
    assert np.array_equal(a.e, b.e)
    c = generate(GeneratorSpec(m=3, n=4, seed=988))
    assert not np.array_equal(a.h1, c.h1)


def test_generate_shapes_and_symmetry():
    for ensemble in ENSEMBLES:
        blk = generate(GeneratorSpec(m=2, n=5, seed=11, ensemble=ensemble))
        assert blk.h1.shape == (2, 2)
        assert blk.h2.shape == (5, 5)
        assert blk.e.shape == (5, 2)
        full = blk.assemble()
        assert np.array_equal(full, full.conj().T)


def test_shared_ensemble_has_exactly_zero_gap():
    for seed in range(20):
        blk = generate(GeneratorSpec(m=3, n=4, seed=seed, ensemble=SHARED))
        w1 = hermitian_eigen(blk.h1)[0]
        w2 = hermitian_eigen(blk.h2)[0]
        # the planted value sits in a decoupled diagonal slot, so both
        # eigensolves reproduce it bit for bit
        assert spectral_gap(w1, w2) == 0.0


def test_clustered_ensemble_hits_gap_target():
    for seed, target in [(0, 0.25), (1, 1.0), (2, 2.0)]:
        blk = generate(GeneratorSpec(
            m=4, n=3, gap_target=target, seed=seed, ensemble=CLUSTERED))
        w1 = hermitian_eigen(blk.h1)[0]
        w2 = hermitian_eigen(blk.h2)[0]
        assert spectral_gap(w1, w2) == pytest.approx(target, rel=1e-10)
        assert w1.min() == pytest.approx(target, rel=1e-10)
        assert w2.max() == pytest.approx(0.0, abs=1e-12)
    blk = generate(GeneratorSpec(
        m=3, n=3, gap_target=2.0, seed=99, ensemble=CLUSTERED))
    gap = spectral_gap(hermitian_eigen(blk.h1)[0],
                       hermitian_eigen(blk.h2)[0])
    assert 1.8 <= gap <= 2.2


def test_coupling_scale_is_exact():
    blk = generate(GeneratorSpec(m=3, n=3, coupling_scale=0.37, seed=5))
    assert spectral_norm(blk.e) == pytest.approx(0.37, abs=1e-13)
    silent = generate(GeneratorSpec(m=3, n=3, coupling_scale=0.0, seed=5))
    assert np.all(silent.e == 0.0)


def test_generator_spec_validation():
    with pytest.raises(ValueError):
        GeneratorSpec(m=0, n=2)
    with pytest.raises(ValueError):
        GeneratorSpec(m=2, n=2, ensemble="circular")
    with pytest.raises(ValueError):
        GeneratorSpec(m=2, n=2, coupling_scale=-0.5)
    with pytest.raises(ValueError):
        GeneratorSpec(m=2, n=2, gap_target=-1.0)


def test_mix_seed_behaves_like_a_hash():
    keys = {mix_seed(0, i) for i in range(2000)}
    assert len(keys) == 2000
    assert all(0 <= k < 2 ** 64 for k in keys)
    assert mix_seed(7, 3) == mix_seed(7, 3)
    assert mix_seed(7, 3) != mix_seed(8, 3)


def test_rng_from_seed_reproduces():
    a = rng_from_seed(123).standard_normal(5)
    b = rng_from_seed(123).standard_normal(5)
    assert np.array_equal(a, b)


def test_random_unitary_is_unitary():
    rng = rng_from_seed(77)
    for n in (1, 2, 6):
        u = random_unitary(rng, n)
        assert np.allclose(u.conj().T @ u, np.eye(n), atol=1e-12)


def test_ensemble_names():
    assert ENSEMBLES == (GAUSSIAN, CLUSTERED, SHARED)
    assert GAUSSIAN == "gaussian-hermitian"
