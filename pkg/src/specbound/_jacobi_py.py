"""Pure-Python (numpy) cyclic Jacobi kernel for Hermitian matrices.

Reference implementation of the rotation scheme shared with the compiled
kernel.  A pivot (p, q) with entry a_pq = |a_pq| e^{i phi} is annihilated
by the unitary plane rotation

    R[p, p] = c,  R[p, q] = sigma,  R[q, p] = -conj(sigma),  R[q, q] = c

with sigma = s e^{i phi}, t = s/c the smaller root of t^2 + 2 tau t = 1
and tau = (a_qq - a_pp) / (2 |a_pq|).  A <- R^* A R zeroes the pivot and
moves its mass onto the diagonal; exact zeros are skipped so decoupled
blocks are left untouched bit for bit.
"""

import math

import numpy as np


def _offdiag_mass(a):
    n = a.shape[0]
    upper = a[np.triu_indices(n, k=1)]
    return math.sqrt(2.0 * float(np.sum(upper.real**2 + upper.imag**2)))


def jacobi_sweeps(a, v, tol, max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations in ``v``.

    Same contract as the compiled kernel: ``v`` starts as the identity,
    returns ``(off, sweeps)`` with the final off-diagonal Frobenius mass.
    """
    n = a.shape[0]
    sweeps = 0
    off = _offdiag_mass(a)
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                absapq = abs(apq)
                tau = (aqq - app) / (2.0 * absapq)
                sgn = 1.0 if tau >= 0.0 else -1.0
                t = sgn / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sigma = (apq / absapq) * s
                sigmac = sigma.conjugate()

                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - sigmac * colq
                a[:, q] = sigma * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - sigma * rowq
                a[q, :] = sigmac * rowp + c * rowq

                a[p, p] = app - t * absapq
                a[q, q] = aqq + t * absapq
                a[p, q] = 0.0
                a[q, p] = 0.0

                colp = v[:, p].copy()
                colq = v[:, q].copy()
                v[:, p] = c * colp - sigmac * colq
                v[:, q] = sigma * colp + c * colq
        sweeps += 1
        off = _offdiag_mass(a)
    return off, sweeps
