"""Self-contained dense complex linear algebra kernel.

Everything spectral in this package funnels through one primitive: a
row-cyclic Jacobi eigensolver for Hermitian matrices (compiled kernel
with a pure-Python fallback, see ``_kernel``).  The SVD is obtained from
the Hermitian augmentation [[0, B], [B^*, 0]], the spectral norm from the
smaller of B^*B / BB^*, and basis completion by pivoted modified
Gram-Schmidt.  No LAPACK-backed decompositions are used, so the solver
itself can be cross-checked against closed forms in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernel

JACOBI_TOL_FACTOR = 1e-13
JACOBI_MAX_SWEEPS = 30

BLOCK1 = "block1"
BLOCK2 = "block2"


class JacobiConvergenceError(RuntimeError):
    """Jacobi sweeps hit the sweep cap with off-diagonal mass left over."""

    def __init__(self, off, tol, sweeps):
        self.off = off
        self.tol = tol
        self.sweeps = sweeps
        super().__init__(
            f"Jacobi did not converge after {sweeps} sweeps: "
            f"off-diagonal mass {off:.3e} > tolerance {tol:.3e}"
        )


class OrthonormalityError(ValueError):
    """A matrix expected to have orthonormal columns does not."""


class SingularShiftError(ValueError):
    """Resolvent shift too close to the spectrum of the block."""


@dataclass(frozen=True)
class Spectrum:
    """Real values sorted descending, optionally tagged with the block
    ('block1' / 'block2') each value came from."""

    values: np.ndarray
    provenance: tuple[str, ...] | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if np.any(values[:-1] < values[1:]):
            raise ValueError("spectrum values must be sorted descending")
        if self.provenance is not None:
            prov = tuple(self.provenance)
            if len(prov) != values.size:
                raise ValueError("provenance length must match values")
            object.__setattr__(self, "provenance", prov)

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        # Lets a Spectrum flow into anything expecting a value array.
        return np.asarray(self.values, dtype=dtype)


def frobenius(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def hermitianize(a, strict: bool = False, rtol: float = 1e-8) -> np.ndarray:
    """Return the Hermitian part (A + A^*)/2 as a fresh complex array.

    Rejects non-finite entries.  With ``strict`` the input may deviate
    from Hermitian by at most ``rtol`` relative in Frobenius norm, which
    catches files or callers handing over genuinely asymmetric data.
    """
    a = np.array(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.all(np.isfinite(a)):
        raise ValueError("matrix contains non-finite entries")
    if strict and a.size:
        asym = frobenius(a - a.conj().T)
        if asym > rtol * max(1.0, frobenius(a)):
            raise ValueError(
                f"matrix is not Hermitian: asymmetry {asym:.3e} exceeds "
                f"relative tolerance {rtol:.1e}"
            )
    return (a + a.conj().T) / 2.0


def check_unitary(u, tol_factor: float = 1e-12) -> np.ndarray:
    """Validate that ``u`` is square with u^* u = I within dim * tol_factor."""
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise OrthonormalityError(f"not square: shape {u.shape}")
    n = u.shape[0]
    defect = frobenius(u.conj().T @ u - np.eye(n))
    if defect > n * tol_factor:
        raise OrthonormalityError(
            f"unitarity defect {defect:.3e} exceeds {n * tol_factor:.3e}"
        )
    return u


def hermitian_eigen(a, strict: bool = False, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Returns ``(w, v)`` with eigenvalues ``w`` descending and eigenvectors
    as the columns of the unitary ``v``.  Sweeps stop once the
    off-diagonal Frobenius mass drops below 1e-13 * ||A||_F; running out
    of sweeps raises :class:`JacobiConvergenceError` carrying the
    leftover mass.  Ties in the eigenvalue ordering keep the Jacobi
    output order (stable sort), so results are deterministic.
    """
    work = hermitianize(a, strict=strict)
    n = work.shape[0]
    if n == 0:
        return np.empty(0), np.empty((0, 0), dtype=np.complex128)
    v = np.eye(n, dtype=np.complex128)
    tol = JACOBI_TOL_FACTOR * frobenius(work)
    off, sweeps = _kernel.jacobi_sweeps(work, v, tol, max_sweeps)
    if off > tol:
        raise JacobiConvergenceError(off, tol, sweeps)
    w = work.diagonal().real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], np.ascontiguousarray(v[:, order])


def spectral_norm(m) -> float:
    """Largest singular value, via the smaller of M^*M and MM^*.

    Zero-sized matrices have norm 0 (the supremum over an empty domain),
    which the degenerate splitting paths rely on.
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {m.shape}")
    p, q = m.shape
    if p == 0 or q == 0:
        return 0.0
    gram = m.conj().T @ m if q <= p else m @ m.conj().T
    w, _ = hermitian_eigen(gram)
    return math.sqrt(max(float(w[0]), 0.0))


def jordan_wielandt(b) -> np.ndarray:
    """Hermitian augmentation [[0, B], [B^*, 0]] of a p-by-q matrix.

    Its eigenvalues are +/- the singular values of B plus |p - q| zeros.
    """
    b = np.asarray(b, dtype=np.complex128)
    if b.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {b.shape}")
    p, q = b.shape
    c = np.zeros((p + q, p + q), dtype=np.complex128)
    c[:p, p:] = b
    c[p:, :p] = b.conj().T
    return c


def svd(b):
    """Singular value decomposition via the Hermitian augmentation.

    Returns ``(s, u, v)`` with ``s`` descending and zero-padded to
    max(p, q) entries, and square unitary ``u`` (p-by-p) and ``v``
    (q-by-q) with B = U S V^* for the rectangular diagonal S built from
    ``s[:min(p, q)]``.
    """
    b = np.asarray(b, dtype=np.complex128)
    if b.ndim != 2 or min(b.shape) == 0:
        raise ValueError(f"expected a nonempty matrix, got shape {b.shape}")
    p, q = b.shape
    r = min(p, q)
    w, z = hermitian_eigen(jordan_wielandt(b))
    s = np.concatenate([np.maximum(w[:r], 0.0), np.zeros(max(p, q) - r)])

    # Eigenvectors of the augmentation split as (x; y) with Bv = s u for
    # the normalized halves; values at numerical-zero scale are left to
    # the orthonormal completion instead (their halves are unreliable).
    rank_tol = (p + q) * 1e-12 * s[0] if s[0] > 0 else math.inf
    u_cols, v_cols = [], []
    for i in range(r):
        if s[i] <= rank_tol:
            break
        x = z[:p, i]
        y = z[p:, i]
        u_cols.append(x / np.linalg.norm(x))
        v_cols.append(y / np.linalg.norm(y))
    u_lead = _polish_orthonormal(np.column_stack(u_cols) if u_cols
                                else np.empty((p, 0), dtype=np.complex128))
    v_lead = _polish_orthonormal(np.column_stack(v_cols) if v_cols
                                 else np.empty((q, 0), dtype=np.complex128))
    u = np.hstack([u_lead, orthonormal_completion(u_lead)])
    v = np.hstack([v_lead, orthonormal_completion(v_lead)])
    return s, u, v


def _polish_orthonormal(x):
    """One two-pass MGS over already nearly-orthonormal columns."""
    x = x.copy()
    for j in range(x.shape[1]):
        for _ in range(2):
            if j:
                x[:, j] -= x[:, :j] @ (x[:, :j].conj().T @ x[:, j])
        x[:, j] /= np.linalg.norm(x[:, j])
    return x


def orthonormalize(x) -> np.ndarray:
    """Two-pass modified Gram-Schmidt on independent columns.

    Intended for mildly perturbed orthonormal sets; a column whose
    residual collapses below 1e-8 of its original norm signals true
    linear dependence and raises :class:`OrthonormalityError`.
    """
    x = np.asarray(x, dtype=np.complex128).copy()
    if x.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {x.shape}")
    for j in range(x.shape[1]):
        before = np.linalg.norm(x[:, j])
        for _ in range(2):
            if j:
                x[:, j] -= x[:, :j] @ (x[:, :j].conj().T @ x[:, j])
        after = np.linalg.norm(x[:, j])
        if before == 0.0 or after < 1e-8 * before:
            raise OrthonormalityError(
                f"column {j} is numerically dependent on earlier columns"
            )
        x[:, j] /= after
    return x


def orthonormal_completion(x1) -> np.ndarray:
    """Complete orthonormal columns X1 (N-by-m) to a unitary [X1, X2].

    Pivoted modified Gram-Schmidt over the standard basis: at each step
    the basis vector with the largest residual against the current span
    is orthogonalized (two passes) and appended.  Returns X2 only; the
    stack [X1, X2] passes :func:`check_unitary`.
    """
    x1 = np.asarray(x1, dtype=np.complex128)
    if x1.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {x1.shape}")
    n, m = x1.shape
    if m > n:
        raise ValueError(f"more columns than rows: {x1.shape}")
    defect = frobenius(x1.conj().T @ x1 - np.eye(m))
    if defect > max(m, 1) * 1e-10:
        raise OrthonormalityError(
            f"input columns not orthonormal: defect {defect:.3e}"
        )
    q = np.empty((n, n), dtype=np.complex128)
    q[:, :m] = x1
    k = m
    while k < n:
        # residual of e_j against span(q[:, :k]) has squared norm
        # 1 - ||row j of q[:, :k]||^2; pick the largest.
        row_mass = np.sum(np.abs(q[:, :k]) ** 2, axis=1)
        j = int(np.argmin(row_mass))
        vec = np.zeros(n, dtype=np.complex128)
        vec[j] = 1.0
        for _ in range(2):
            vec -= q[:, :k] @ (q[:, :k].conj().T @ vec)
        norm = np.linalg.norm(vec)
        if norm < 1e-8:
            raise OrthonormalityError(
                "orthogonality loss during completion (ill-conditioned basis)"
            )
        q[:, k] = vec / norm
        k += 1
    return q[:, m:]


def strike(a, i: int) -> np.ndarray:
    """Remove row and column ``i`` (0-based) from a Hermitian matrix.

    Striking a 1x1 matrix yields the legal 0x0 matrix.
    """
    a = hermitianize(a)
    n = a.shape[0]
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for dimension {n}")
    return np.delete(np.delete(a, i, axis=0), i, axis=1)
