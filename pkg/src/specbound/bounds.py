"""Perturbation bounds for block-partitioned Hermitian matrices.

For A = [[H1, E^*], [E, H2]] versus its block-diagonal part, the
eigenvalue shifts obey three families of bounds:

* ``weyl_bound``       |shift| <= ||E||                    (gap-blind)
* ``quadratic_bound``  |shift| <= ||E||^2 / gap            (blows up at gap 0)
* ``main_bound``       |shift| <= 2||E||^2 / (gap + sqrt(gap^2 + 4||E||^2))

The third interpolates between the other two: it never exceeds ||E||,
tends to ||E|| as the gap closes, and behaves like ||E||^2/gap for wide
gaps.  Gaps can be taken per merged index (distance from each
block-diagonal eigenvalue to the other block's spectrum) or globally
(minimum over all pairs).  The same machinery applies to singular values
of 2x2-block rectangular matrices with coupling norm
max(||E1||, ||E2||), including the one-sided degenerate split [G, E].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    BLOCK1,
    BLOCK2,
    SingularShiftError,
    frobenius,
    hermitian_eigen,
    hermitianize,
    spectral_norm,
    svd,
)

# Gaps below this multiple of the matrix scale count as zero for the
# quadratic bound's applicability flag; main_bound always uses raw gaps.
GAP_FLOOR_FACTOR = 1e-14


@dataclass(frozen=True)
class BlockHermitian:
    """Partition of a Hermitian matrix into H1 (m), H2 (n) and the
    coupling block E (n-by-m, the lower-left corner)."""

    h1: np.ndarray
    h2: np.ndarray
    e: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "h1", hermitianize(self.h1))
        object.__setattr__(self, "h2", hermitianize(self.h2))
        e = np.asarray(self.e, dtype=np.complex128)
        if e.shape != (self.n, self.m):
            raise ValueError(
                f"coupling block must be {self.n}x{self.m}, got {e.shape}"
            )
        if e.size and not np.all(np.isfinite(e)):
            raise ValueError("coupling block contains non-finite entries")
        object.__setattr__(self, "e", e)

    @property
    def m(self) -> int:
        return self.h1.shape[0]

    @property
    def n(self) -> int:
        return self.h2.shape[0]

    def assemble(self) -> np.ndarray:
        dim = self.m + self.n
        a = np.empty((dim, dim), dtype=np.complex128)
        a[: self.m, : self.m] = self.h1
        a[: self.m, self.m:] = self.e.conj().T
        a[self.m:, : self.m] = self.e
        a[self.m:, self.m:] = self.h2
        return a


def split_hermitian(a, m: int) -> BlockHermitian:
    """Partition a Hermitian matrix at row/column ``m`` (first m form H1)."""
    a = hermitianize(a)
    n = a.shape[0]
    if not 1 <= m < n:
        raise ValueError(f"split {m} must satisfy 1 <= m < {n}")
    return BlockHermitian(h1=a[:m, :m], h2=a[m:, m:], e=a[m:, :m])


@dataclass(frozen=True)
class GapProfile:
    """Merged block-diagonal spectrum with per-index and global gaps.

    ``gaps[i]`` is the distance from ``values[i]`` to the spectrum of
    the block it does *not* belong to; ``gap`` is their minimum, which
    equals the minimum distance over all cross-block pairs.
    """

    values: np.ndarray
    provenance: tuple[str, ...]
    gaps: np.ndarray
    gap: float


def merge_spectra(values1, values2):
    """Descending stable merge; block-1 entries precede equal block-2 ones."""
    v1 = np.sort(np.asarray(values1, dtype=float))[::-1]
    v2 = np.sort(np.asarray(values2, dtype=float))[::-1]
    merged = np.concatenate([v1, v2])
    tags = np.array([0] * v1.size + [1] * v2.size)
    order = np.argsort(-merged, kind="stable")
    prov = tuple(BLOCK1 if t == 0 else BLOCK2 for t in tags[order])
    return merged[order], prov


def spectral_gap(values1, values2) -> float:
    """Minimum distance between two spectra over all pairs."""
    v1 = np.asarray(values1, dtype=float)
    v2 = np.asarray(values2, dtype=float)
    if v1.size == 0 or v2.size == 0:
        raise ValueError("spectral gap of an empty spectrum is undefined")
    return float(np.min(np.abs(v1[:, None] - v2[None, :])))


def per_index_gaps(values1, values2) -> GapProfile:
    """Gap profile over the merged spectrum of two blocks."""
    v1 = np.asarray(values1, dtype=float)
    v2 = np.asarray(values2, dtype=float)
    if v1.size == 0 or v2.size == 0:
        raise ValueError("per-index gaps need both spectra nonempty")
    merged, prov = merge_spectra(v1, v2)
    gaps = np.empty(merged.size)
    for i, (val, tag) in enumerate(zip(merged, prov)):
        other = v2 if tag == BLOCK1 else v1
        gaps[i] = np.min(np.abs(other - val))
    return GapProfile(values=merged, provenance=prov, gaps=gaps,
                      gap=float(np.min(gaps)))


def weyl_bound(e) -> float:
    """Gap-blind eigenvalue shift bound: the coupling norm ||E||."""
    return spectral_norm(e)


def quadratic_bound(coupling_norm: float, gap: float) -> float:
    """Gap-quadratic bound ||E||^2 / gap; +inf when the gap vanishes."""
    if gap == 0.0:
        return math.inf
    return coupling_norm**2 / gap


def main_bound(coupling_norm: float, gap: float) -> float:
    """Gap-aware shift bound 2||E||^2 / (gap + sqrt(gap^2 + 4||E||^2)).

    Dominates both classical bounds: never exceeds ||E||, and stays
    below ||E||^2/gap whenever the gap is positive.  The gap-0 limit is
    returned exactly as ||E|| and 0/0 resolves to 0.
    """
    if coupling_norm == 0.0:
        return 0.0
    if gap == 0.0:
        return coupling_norm
    return 2.0 * coupling_norm**2 / (gap + math.hypot(gap, 2.0 * coupling_norm))


def exact_2x2(alpha: float, beta: float, eps: float):
    """Eigenvalues of [[alpha, eps], [eps, beta]] and their exact shift.

    Returns ``(lam_plus, lam_minus, shift)`` with
    lam_plus = max(alpha, beta) + shift and
    lam_minus = min(alpha, beta) - shift; the shift is the gap-aware
    bound evaluated at |eps| and |alpha - beta|, for which it is exact.
    """
    hi, lo = (alpha, beta) if alpha >= beta else (beta, alpha)
    shift = main_bound(abs(eps), hi - lo)
    return hi + shift, lo - shift, shift


def shifted_schur_complement(block: BlockHermitian, lam: float) -> np.ndarray:
    """H1 - lam*I - E^* (H2 - lam*I)^{-1} E.

    Requires ``lam`` to stay clear of H2's spectrum (relative distance
    1e-10 of ||A||), otherwise the resolvent is numerically singular.
    When lam is the top eigenvalue of the assembled matrix and exceeds
    every block eigenvalue, this matrix has zero as its largest
    eigenvalue (inertia of the block congruence).
    """
    w2, v2 = hermitian_eigen(block.h2)
    norm_a = spectral_norm(block.assemble())
    if np.min(np.abs(w2 - lam)) <= 1e-10 * norm_a:
        raise SingularShiftError(
            f"shift {lam!r} within 1e-10*||A|| of the H2 spectrum"
        )
    f = v2.conj().T @ block.e
    m_lam = (block.h1 - lam * np.eye(block.m)
             - f.conj().T @ (f / (w2 - lam)[:, None]))
    return hermitianize(m_lam)


@dataclass(frozen=True)
class EigenBoundReport:
    """Per-index eigenvalue shift bounds for one block partition.

    Arrays are indexed by the merged descending spectrum of H1 and H2.
    ``quadratic_i`` holds +inf where the per-index gap is below the
    numerical floor.  Oracle fields are None unless the assembled matrix
    was eigensolved.
    """

    m: int
    n: int
    block_eigenvalues: np.ndarray
    provenance: tuple[str, ...]
    gaps: np.ndarray
    gap: float
    coupling_norm: float
    weyl: float
    quadratic_i: np.ndarray
    main_i: np.ndarray
    main_global: float
    eigenvalues: np.ndarray | None = None
    true_diff: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.m + self.n


def eigen_bound_report(block: BlockHermitian, run_oracle: bool = False
                       ) -> EigenBoundReport:
    """Evaluate every bound family on one partition; optionally eigensolve
    the assembled matrix and record the observed shifts index by index."""
    w1, _ = hermitian_eigen(block.h1)
    w2, _ = hermitian_eigen(block.h2)
    profile = per_index_gaps(w1, w2)
    coupling_norm = spectral_norm(block.e)

    # Weyl upper estimate of ||A|| used only to floor noise-level gaps
    # for the quadratic bound's applicability.
    scale = float(np.max(np.abs(profile.values))) + coupling_norm
    floor = GAP_FLOOR_FACTOR * scale
    quadratic_i = np.array([
        quadratic_bound(coupling_norm, g if g > floor else 0.0)
        for g in profile.gaps
    ])
    main_i = np.array([main_bound(coupling_norm, g) for g in profile.gaps])

    eigenvalues = true_diff = None
    if run_oracle:
        eigenvalues, _ = hermitian_eigen(block.assemble())
        true_diff = np.abs(eigenvalues - profile.values)

    return EigenBoundReport(
        m=block.m, n=block.n,
        block_eigenvalues=profile.values, provenance=profile.provenance,
        gaps=profile.gaps, gap=profile.gap,
        coupling_norm=coupling_norm, weyl=coupling_norm,
        quadratic_i=quadratic_i, main_i=main_i,
        main_global=main_bound(coupling_norm, profile.gap),
        eigenvalues=eigenvalues, true_diff=true_diff,
    )


@dataclass(frozen=True)
class SingularBoundReport:
    """Per-index singular value shift bounds for a 2x2-block partition.

    ``block_sigmas`` has max(m+n, k+l) entries (zero padded); bounds
    cover indices up to min(m+n, k+l) and the tail beyond it must be
    zero for both the split and the assembled matrix.
    """

    m: int
    n: int
    k: int
    l: int
    block_sigmas: np.ndarray
    provenance: tuple[str, ...]
    gaps: np.ndarray
    gap: float
    coupling_norm: float
    main_i: np.ndarray
    main_global: float
    sigmas: np.ndarray | None = None
    true_diff: np.ndarray | None = None

    @property
    def bounded_count(self) -> int:
        return min(self.m + self.n, self.k + self.l)

    def tail_defect(self) -> float:
        """Largest tail entry that exact arithmetic would make zero."""
        r = self.bounded_count
        defect = float(np.max(self.block_sigmas[r:], initial=0.0))
        if self.sigmas is not None:
            defect = max(defect, float(np.max(self.sigmas[r:], initial=0.0)))
        return defect


def sv_bound_report(g1, e1, e2, g2, run_oracle: bool = False
                    ) -> SingularBoundReport:
    """Singular value bounds for B = [[G1, E1], [E2, G2]].

    G1 is m-by-k, G2 is n-by-l, and the coupling norm is
    max(||E1||, ||E2||).  Each diagonal block's singular value sequence
    is zero padded to max of its dimensions before merging, so padding
    zeros participate in the gaps.  Empty G blocks belong to the
    one-sided degenerate route, see :func:`sv_degenerate_bound`.
    """
    g1 = np.asarray(g1, dtype=np.complex128)
    g2 = np.asarray(g2, dtype=np.complex128)
    e1 = np.asarray(e1, dtype=np.complex128)
    e2 = np.asarray(e2, dtype=np.complex128)
    if min(g1.shape) == 0 or min(g2.shape) == 0:
        raise ValueError(
            "empty diagonal block: use sv_degenerate_bound for one-sided "
            "splits [G, E]"
        )
    m, k = g1.shape
    n, l = g2.shape
    if e1.shape != (m, l) or e2.shape != (n, k):
        raise ValueError(
            f"coupling blocks must be {m}x{l} and {n}x{k}, "
            f"got {e1.shape} and {e2.shape}"
        )

    s1 = svd(g1)[0]
    s2 = svd(g2)[0]
    merged, prov = merge_spectra(s1, s2)
    total = max(m + n, k + l)
    r = min(m + n, k + l)
    merged, prov = merged[:total], prov[:total]
    gaps = np.empty(r)
    for i in range(r):
        other = s2 if prov[i] == BLOCK1 else s1
        gaps[i] = np.min(np.abs(other - merged[i]))
    gap = float(np.min(gaps))
    coupling_norm = max(spectral_norm(e1), spectral_norm(e2))
    main_i = np.array([main_bound(coupling_norm, g) for g in gaps])

    sigmas = true_diff = None
    if run_oracle:
        b = np.block([[g1, e1], [e2, g2]])
        sigmas = svd(b)[0]
        true_diff = np.abs(sigmas[:r] - merged[:r])

    return SingularBoundReport(
        m=m, n=n, k=k, l=l,
        block_sigmas=merged, provenance=prov, gaps=gaps, gap=gap,
        coupling_norm=coupling_norm, main_i=main_i,
        main_global=main_bound(coupling_norm, gap),
        sigmas=sigmas, true_diff=true_diff,
    )


def sv_degenerate_bound(block_sigma: float, coupling_norm: float) -> float:
    """Shift bound for the one-sided split B = [G, E] at one index:
    2||E||^2 / (2*sigma + sqrt(sigma^2 + 4||E||^2)) with sigma the
    corresponding singular value of G."""
    if coupling_norm == 0.0:
        return 0.0
    return (2.0 * coupling_norm**2
            / (2.0 * block_sigma + math.hypot(block_sigma, 2.0 * coupling_norm)))
