# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel for Hermitian matrices.

Semantics are identical to specbound._jacobi_py; see there for the
reference formulation.
"""

from libc.math cimport sqrt, fabs, hypot


cdef inline double _offdiag_mass(double complex[:, ::1] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t i, j
    cdef double acc = 0.0
    cdef double re, im
    for i in range(n):
        for j in range(i + 1, n):
            re = a[i, j].real
            im = a[i, j].imag
            acc += re * re + im * im
    return sqrt(2.0 * acc)


def jacobi_sweeps(double complex[:, ::1] a, double complex[:, ::1] v,
                  double tol, int max_sweeps):
    """Diagonalize Hermitian ``a`` in place by row-cyclic Jacobi rotations.

    ``v`` must come in as the identity; it accumulates the rotations so
    that on exit a_in = v @ diag(a.diagonal()) @ v^*.  Returns
    ``(off, sweeps)`` where ``off`` is the off-diagonal Frobenius mass
    after the last sweep.  The caller decides whether ``off > tol`` is an
    error.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweeps = 0
    cdef double off, app, aqq, absapq, tau, t, c, s, sgn
    cdef double complex apq, sigma, sigmac, aip, aiq, vip, viq

    off = _offdiag_mass(a, n)
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq.real == 0.0 and apq.imag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                absapq = hypot(apq.real, apq.imag)
                tau = (aqq - app) / (2.0 * absapq)
                sgn = 1.0 if tau >= 0.0 else -1.0
                t = sgn / (fabs(tau) + hypot(1.0, tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                sigma = (apq / absapq) * s
                sigmac = sigma.conjugate()

                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - sigmac * aiq
                    a[i, q] = sigma * aip + c * aiq
                    a[p, i] = a[i, p].conjugate()
                    a[q, i] = a[i, q].conjugate()

                a[p, p] = app - t * absapq
                a[q, q] = aqq + t * absapq
                a[p, q] = 0.0
                a[q, p] = 0.0

                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - sigmac * viq
                    v[i, q] = sigma * vip + c * viq
        sweeps += 1
        off = _offdiag_mass(a, n)
    return off, sweeps
