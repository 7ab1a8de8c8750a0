"""Brute-force oracle harness: every bound vs. an actual eigensolve/SVD.

Three instance families run per invocation, with counts derived from a
single ``trials`` knob:

* ``trials``      block-Hermitian eigenvalue instances (all three
                  ensembles round-robin, including the exact-zero-gap
                  one) checked against the gap-aware chain
                  true diff <= per-index bound <= global bound <= ||E||
                  and against both classical bounds;
* ``trials // 2`` rectangular 2x2-block singular value instances,
                  including the zero-tail claim for non-square splits;
* ``trials // 10`` one-sided [G, E] degenerate instances.

Every trial derives its own Philox key from (seed, trial index), so any
reported violation replays standalone from the message alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bounds import (
    eigen_bound_report,
    sv_bound_report,
    sv_degenerate_bound,
)
from .ensembles import (
    ENSEMBLES,
    GeneratorSpec,
    complex_gaussian,
    gaussian_hermitian,
    generate,
    mix_seed,
    random_unitary,
    rng_from_seed,
)
from .linalg import hermitian_eigen, orthonormalize, spectral_norm, svd

# Index-space offsets keeping the three families' trial keys disjoint.
_SV_STRIDE = 10_000_000
_DEGENERATE_STRIDE = 20_000_000
_SUBSPACE_STRIDE = 30_000_000

EIGEN_TOL_FACTOR = 1e-9       # x (1 + ||A||), validity checks
CLASSICAL_REL_TOL = 1e-12     # relative, dominance over classical bounds
TAIL_TOL = 1e-10              # zero-tail defect for non-square splits


@dataclass
class FuzzResult:
    """Aggregated outcome of one fuzz invocation."""

    seed: int
    eigen_trials: int = 0
    sv_trials: int = 0
    degenerate_trials: int = 0
    violations: list[str] = field(default_factory=list)
    eigen_worst_slack: float = np.inf
    sv_worst_slack: float = np.inf
    degenerate_worst_slack: float = np.inf
    weyl_margin: float = np.inf
    quadratic_margin: float = np.inf
    zero_gap_trials: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def _eigen_instance(base_seed: int, index: int, half: int) -> GeneratorSpec:
    """Dimensions and ensemble parameters for eigenvalue trial `index`."""
    key = mix_seed(base_seed, index)
    rng = rng_from_seed(key)
    m = int(rng.integers(1, half + 1))
    n = int(rng.integers(1, half + 1))
    coupling = 0.0 if index % 50 == 49 else float(
        10.0 ** rng.uniform(-4.0, 0.0))
    return GeneratorSpec(
        m=m, n=n,
        gap_target=float(rng.uniform(0.05, 2.0)),
        coupling_scale=coupling,
        seed=mix_seed(key, 1),
        ensemble=ENSEMBLES[index % len(ENSEMBLES)],
    )


def _check_eigen_trial(spec: GeneratorSpec, result: FuzzResult,
                       label: str) -> None:
    report = eigen_bound_report(generate(spec), run_oracle=True)
    norm_a = float(np.max(np.abs(report.eigenvalues), initial=0.0))
    tol = EIGEN_TOL_FACTOR * (1.0 + norm_a)
    if report.gap == 0.0:
        result.zero_gap_trials += 1
    for i in range(report.dim):
        diff = float(report.true_diff[i])
        main = float(report.main_i[i])
        result.eigen_worst_slack = min(result.eigen_worst_slack, main - diff)
        if diff > main + tol:
            result.violations.append(
                f"{label}: index {i}: true diff {diff:.6e} exceeds "
                f"per-index bound {main:.6e} (spec {spec!r})")
        if main > report.main_global + tol:
            result.violations.append(
                f"{label}: index {i}: per-index bound {main:.6e} exceeds "
                f"global bound {report.main_global:.6e} (spec {spec!r})")
        if report.weyl > 0.0:
            margin = (report.weyl - main) / report.weyl
            result.weyl_margin = min(result.weyl_margin, margin)
            if margin < -CLASSICAL_REL_TOL:
                result.violations.append(
                    f"{label}: index {i}: per-index bound {main:.6e} above "
                    f"coupling norm {report.weyl:.6e} (spec {spec!r})")
        quad = float(report.quadratic_i[i])
        if np.isfinite(quad) and quad > 0.0:
            margin = (quad - main) / quad
            result.quadratic_margin = min(result.quadratic_margin, margin)
            if margin < -CLASSICAL_REL_TOL:
                result.violations.append(
                    f"{label}: index {i}: per-index bound {main:.6e} above "
                    f"gap-quadratic bound {quad:.6e} (spec {spec!r})")
    if report.main_global > report.weyl + tol:
        result.violations.append(
            f"{label}: global bound {report.main_global:.6e} exceeds "
            f"coupling norm {report.weyl:.6e} (spec {spec!r})")


def _check_sv_trial(base_seed: int, index: int, result: FuzzResult) -> None:
    key = mix_seed(base_seed, _SV_STRIDE + index)
    rng = rng_from_seed(key)
    m, n, k, l = (int(rng.integers(1, 7)) for _ in range(4))
    scale = float(rng.uniform(0.5, 2.0))
    coupling = float(10.0 ** rng.uniform(-3.0, 0.3))
    g1 = scale * complex_gaussian(rng, m, k)
    g2 = scale * complex_gaussian(rng, n, l)
    e1 = coupling * complex_gaussian(rng, m, l)
    e2 = coupling * complex_gaussian(rng, n, k)
    report = sv_bound_report(g1, e1, e2, g2, run_oracle=True)
    label = f"sv trial {index} (key {key})"
    tol = EIGEN_TOL_FACTOR * (1.0 + float(report.sigmas[0]))
    for i in range(report.bounded_count):
        diff = float(report.true_diff[i])
        main = float(report.main_i[i])
        result.sv_worst_slack = min(result.sv_worst_slack, main - diff)
        if diff > main + tol:
            result.violations.append(
                f"{label}: index {i}: true diff {diff:.6e} exceeds "
                f"per-index bound {main:.6e}")
        if main > report.main_global + tol:
            result.violations.append(
                f"{label}: index {i}: per-index bound {main:.6e} exceeds "
                f"global bound {report.main_global:.6e}")
    defect = report.tail_defect()
    if defect > TAIL_TOL:
        result.violations.append(
            f"{label}: zero tail violated: defect {defect:.6e}")


def _check_degenerate_trial(base_seed: int, index: int,
                            result: FuzzResult) -> None:
    key = mix_seed(base_seed, _DEGENERATE_STRIDE + index)
    rng = rng_from_seed(key)
    p, q, extra = (int(rng.integers(1, 7)) for _ in range(3))
    g = float(rng.uniform(0.5, 2.0)) * complex_gaussian(rng, p, q)
    e = float(10.0 ** rng.uniform(-3.0, 0.3)) * complex_gaussian(
        rng, p, extra)
    sigma_block = svd(g)[0]
    sigma_full = svd(np.hstack([g, e]))[0]
    norm_e = spectral_norm(e)
    label = f"degenerate trial {index} (key {key})"
    for i in range(min(p, q)):
        diff = abs(float(sigma_full[i]) - float(sigma_block[i]))
        bound = sv_degenerate_bound(float(sigma_block[i]), norm_e)
        result.degenerate_worst_slack = min(
            result.degenerate_worst_slack, bound - diff)
        if diff > bound + TAIL_TOL:
            result.violations.append(
                f"{label}: index {i}: true diff {diff:.6e} exceeds "
                f"one-sided bound {bound:.6e}")


def _perturbed_eigenbasis(rng, a: np.ndarray, m: int) -> np.ndarray:
    n = a.shape[0]
    _, v = hermitian_eigen(a)
    cols = rng.permutation(n)[:m]
    noise = 10.0 ** rng.uniform(-8.0, -2.0)
    return orthonormalize(v[:, cols] + noise * complex_gaussian(rng, n, m))


def random_subspace_instance(key: int, max_dim: int = 16):
    """A seeded (A, X1) pair for the residual/coupling identity checks:
    Gaussian Hermitian A with either a generic random subspace or a
    perturbed eigenvector subspace.  The identity ||E|| == ||R|| is
    basis-independent, so both kinds are fair game here."""
    rng = rng_from_seed(key)
    n = int(rng.integers(2, max_dim + 1))
    m = int(rng.integers(1, n))
    a = gaussian_hermitian(rng, n)
    if rng.integers(0, 2):
        x1 = _perturbed_eigenbasis(rng, a, m)
    else:
        x1 = random_unitary(rng, n)[:, :m]
    return a, x1


def approximate_subspace_instance(key: int, max_dim: int = 16):
    """A seeded (A, X1) pair for certified-bound validity fuzzing: X1 is
    always a noisy copy of m randomly chosen eigenvectors (noise scale
    log-uniform in [1e-8, 1e-2]).

    The per-column route pairs each Ritz value with the eigenvalue at
    its position in the merged block spectrum; that pairing matches the
    rank certified by the one-column partition only when each column
    approximates an eigenvector.  A basis that is nowhere near invariant
    can land a Ritz value at a different rank than the partition
    certifies, so validity fuzzing stays in the approximate regime.
    (The whole-residual route needs no such restriction.)"""
    rng = rng_from_seed(key)
    n = int(rng.integers(2, max_dim + 1))
    m = int(rng.integers(1, n))
    a = gaussian_hermitian(rng, n)
    return a, _perturbed_eigenbasis(rng, a, m)


def run_fuzz(trials: int = 10_000, max_dim: int = 12,
             seed: int = 0) -> FuzzResult:
    """Run all three families and aggregate violations and worst slack.

    ``max_dim`` caps the assembled dimension of the eigenvalue family
    (each block up to max_dim // 2); the rectangular families use blocks
    up to 6 a side.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if max_dim < 2:
        raise ValueError("max_dim must be at least 2")
    result = FuzzResult(seed=seed)
    half = max(1, max_dim // 2)
    for i in range(trials):
        spec = _eigen_instance(seed, i, half)
        _check_eigen_trial(spec, result, f"eigen trial {i}")
        result.eigen_trials += 1
    for j in range(trials // 2):
        _check_sv_trial(seed, j, result)
        result.sv_trials += 1
    for t in range(trials // 10):
        _check_degenerate_trial(seed, t, result)
        result.degenerate_trials += 1
    return result
