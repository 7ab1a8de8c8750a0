"""Lanczos iteration with full reorthogonalization.

Produces orthonormal Krylov bases whose Ritz values feed the
certification pipeline.  Reorthogonalization is the full two-pass kind:
ghost eigenvalues from drifting bases would corrupt exactly the residual
magnitudes the certifier is meant to measure, and at the matrix sizes
this library targets the extra O(N k^2) work is irrelevant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certification import SubspaceApproximation, rotate_to_diagonal
from .linalg import frobenius, hermitian_eigen, hermitianize

# A subdiagonal below this multiple of ||A||_F means the Krylov space is
# (numerically) invariant and the iteration stops early.
BREAKDOWN_FACTOR = 1e-13


@dataclass(frozen=True)
class LanczosState:
    """The iterated matrix ``a``, orthonormal basis ``q``, tridiagonal
    coefficients (``alpha`` diagonal, ``beta`` subdiagonal) and the
    start-vector seed."""

    a: np.ndarray
    q: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    seed: int

    @property
    def steps(self) -> int:
        return self.alpha.size

    def tridiagonal(self) -> np.ndarray:
        t = np.diag(self.alpha.astype(float))
        for j in range(self.steps - 1):
            t[j + 1, j] = t[j, j + 1] = self.beta[j]
        return t


def lanczos(a, k: int, seed: int = 0) -> LanczosState:
    """Run ``k`` Lanczos steps from a seeded random start vector.

    The start vector has uniform entries on [-1, 1) drawn from a Philox
    stream keyed by ``seed``.  Every step reorthogonalizes the new
    vector against the whole basis twice.  If a subdiagonal entry falls
    below 1e-13 * ||A||_F the basis spans an invariant subspace and the
    state is returned with fewer steps — a success, not an error.
    """
    a = hermitianize(a)
    n = a.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"step count {k} must satisfy 1 <= k <= {n}")
    rng = np.random.Generator(np.random.Philox(key=seed))
    v = rng.uniform(-1.0, 1.0, size=n).astype(np.complex128)
    v /= np.linalg.norm(v)

    cutoff = BREAKDOWN_FACTOR * frobenius(a)
    q = np.empty((n, k), dtype=np.complex128)
    q[:, 0] = v
    alpha = np.empty(k)
    beta = np.empty(max(k - 1, 0))
    for j in range(k):
        w = a @ q[:, j]
        alpha[j] = (q[:, j].conj() @ w).real
        w = w - alpha[j] * q[:, j]
        if j > 0:
            w = w - beta[j - 1] * q[:, j - 1]
        basis = q[:, : j + 1]
        for _ in range(2):
            w = w - basis @ (basis.conj().T @ w)
        if j == k - 1:
            break
        b = np.linalg.norm(w)
        if b < cutoff:
            return LanczosState(
                a=a, q=q[:, : j + 1].copy(), alpha=alpha[: j + 1].copy(),
                beta=beta[:j].copy(), seed=seed,
            )
        beta[j] = b
        q[:, j + 1] = w / b
    return LanczosState(a=a, q=q, alpha=alpha, beta=beta, seed=seed)


def ritz_subspace(state: LanczosState, m: int,
                  indices=None) -> SubspaceApproximation:
    """Map ``m`` Ritz pairs of the tridiagonal matrix back to full-size
    vectors and package them for the certifier.

    By default the extreme pairs are taken: ceil(m/2) from the top of
    the Ritz spectrum and floor(m/2) from the bottom.  ``indices``
    (positions into the descending Ritz order) overrides the selection.
    """
    k = state.steps
    if not 1 <= m <= k:
        raise ValueError(f"selection size {m} must satisfy 1 <= m <= {k}")
    w, vec = hermitian_eigen(state.tridiagonal())
    if indices is None:
        hi = (m + 1) // 2
        chosen = list(range(hi)) + list(range(k - (m - hi), k))
    else:
        chosen = sorted(int(i) for i in indices)
        if len(chosen) != m or len(set(chosen)) != m:
            raise ValueError("explicit selection must be m distinct indices")
        if not 0 <= chosen[0] <= chosen[-1] < k:
            raise ValueError("explicit selection out of range")
    # The selected columns are already Ritz vectors; the rotation only
    # pins the deterministic phase convention.
    x1, ritz = rotate_to_diagonal(state.q @ vec[:, chosen],
                                  np.diag(w[chosen].astype(complex)))
    return SubspaceApproximation(a=state.a, x1=x1,
                                 h1=np.diag(ritz.astype(complex)),
                                 ritz_values=ritz)
