"""Seeded random instance generators for the bound machinery.

Three ensembles cover the gap regimes that matter:

* ``gaussian-hermitian`` — dense Gaussian Hermitian blocks, gaps land
  where they land;
* ``clustered-spectrum`` — block spectra built on opposite sides of a
  prescribed gap (H1 in [gap_target, gap_target+1], H2 in [-1, 0], both
  endpoints pinned) and hidden by random unitary conjugation;
* ``shared-eigenvalue`` — one eigenvalue planted bitwise-identically in
  both blocks, so the cross-block gap is exactly zero and the
  gap-quadratic bound's blow-up regime is exercised.

All randomness flows through numpy's Philox generator keyed by each
``GeneratorSpec``'s seed: counter-based, platform-stable, and cheap to
split by key mixing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import BlockHermitian
from .linalg import hermitian_eigen, hermitianize, spectral_norm

GAUSSIAN = "gaussian-hermitian"
CLUSTERED = "clustered-spectrum"
SHARED = "shared-eigenvalue"
ENSEMBLES = (GAUSSIAN, CLUSTERED, SHARED)

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix_seed(base: int, index: int) -> int:
    """Derive a per-trial 64-bit key from a base seed and trial index."""
    x = (base ^ ((index + 1) * _GOLDEN)) & _MASK64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK64
    return (x ^ (x >> 31)) & _MASK64


def rng_from_seed(seed: int) -> np.random.Generator:
    """Philox generator keyed directly by a 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=seed & _MASK64))


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one random block instance."""

    m: int
    n: int
    gap_target: float = 1.0
    coupling_scale: float = 0.1
    seed: int = 0
    ensemble: str = GAUSSIAN

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("block sizes must be at least 1")
        if self.ensemble not in ENSEMBLES:
            raise ValueError(
                f"unknown ensemble {self.ensemble!r}; choose from {ENSEMBLES}"
            )
        if self.gap_target < 0 or self.coupling_scale < 0:
            raise ValueError("gap_target and coupling_scale must be >= 0")


def complex_gaussian(rng: np.random.Generator, rows: int, cols: int
                     ) -> np.ndarray:
    z = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal(
        (rows, cols))
    return z / np.sqrt(2.0)


def gaussian_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    """Gaussian Hermitian matrix (GUE-style, unnormalized)."""
    return hermitianize(complex_gaussian(rng, n, n))


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Unitary drawn as the eigenvector matrix of a Gaussian Hermitian
    sample — rotation-invariant up to column phases, which is all the
    spectrum-hiding conjugations here need."""
    if n == 1:
        phase = np.exp(2j * np.pi * rng.random())
        return np.array([[phase]])
    _, v = hermitian_eigen(gaussian_hermitian(rng, n))
    return v


def _scaled_coupling(rng: np.random.Generator, rows: int, cols: int,
                     scale: float) -> np.ndarray:
    if scale == 0.0:
        return np.zeros((rows, cols), dtype=np.complex128)
    e = complex_gaussian(rng, rows, cols)
    norm = spectral_norm(e)
    if norm == 0.0:  # pragma: no cover - Gaussian draw is never all-zero
        return e
    return e * (scale / norm)


def _conjugated(rng: np.random.Generator, values: np.ndarray) -> np.ndarray:
    u = random_unitary(rng, values.size)
    return hermitianize((u * values[None, :]) @ u.conj().T)


def _planted(rng: np.random.Generator, shared: float, n: int) -> np.ndarray:
    """Hermitian matrix whose spectrum contains ``shared`` bitwise: the
    value sits in a decoupled 1x1 diagonal block that no eigensolver
    rotation will ever touch."""
    h = np.zeros((n, n), dtype=np.complex128)
    h[0, 0] = shared
    if n > 1:
        h[1:, 1:] = gaussian_hermitian(rng, n - 1)
    return h


def generate(spec: GeneratorSpec) -> BlockHermitian:
    """Deterministic BlockHermitian instance for a GeneratorSpec."""
    rng = rng_from_seed(spec.seed)
    m, n = spec.m, spec.n
    if spec.ensemble == GAUSSIAN:
        h1 = gaussian_hermitian(rng, m)
        h2 = gaussian_hermitian(rng, n)
    elif spec.ensemble == CLUSTERED:
        s1 = spec.gap_target + np.concatenate(
            [[0.0], rng.uniform(0.0, 1.0, m - 1)])
        s2 = -np.concatenate([[0.0], rng.uniform(0.0, 1.0, n - 1)])
        h1 = _conjugated(rng, s1)
        h2 = _conjugated(rng, s2)
    else:
        shared = rng.uniform(-1.0, 1.0)
        h1 = _planted(rng, shared, m)
        h2 = _planted(rng, shared, n)
    e = _scaled_coupling(rng, n, m, spec.coupling_scale)
    return BlockHermitian(h1=h1, h2=h2, e=e)
