# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementation of the walk time-stepping kernels.

Same contracts as ``_walk_py``; the inner loops run in C.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin

cnp.import_array()

__all__ = ["position_evolve", "kspace_evolve"]


def position_evolve(
    double complex a,
    double complex b,
    double complex c,
    double complex d,
    double complex alpha,
    double complex beta,
    Py_ssize_t n,
):
    """Evolve a walker localized at the origin for ``n`` steps.

    Returns a (2, 2n+1) complex array of component amplitudes over the
    lattice window [-n, n]; row 0 is the left-moving component.
    """
    cdef Py_ssize_t size = 2 * n + 1
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] cur = np.zeros((2, size), dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] nxt = np.zeros((2, size), dtype=np.complex128)
    cur[0, n] = alpha
    cur[1, n] = beta
    if n == 0:
        return cur

    cdef double complex[:, ::1] p = cur
    cdef double complex[:, ::1] q = nxt
    cdef double complex[:, ::1] tmp
    cdef Py_ssize_t step, x
    # Support after `step+1` steps spans indices [n-step-1, n+step+1];
    # restricting the sweep keeps the cost at O(n^2) overall.
    for step in range(n):
        for x in range(n - step - 1, n + step + 2):
            if x + 1 < size:
                q[0, x] = a * p[0, x + 1] + b * p[1, x + 1]
            else:
                q[0, x] = 0.0
            if x - 1 >= 0:
                q[1, x] = c * p[0, x - 1] + d * p[1, x - 1]
            else:
                q[1, x] = 0.0
        tmp = p
        p = q
        q = tmp

    if n % 2 == 1:
        return nxt
    return cur


def kspace_evolve(
    double complex a,
    double complex b,
    double complex c,
    double complex d,
    double complex alpha,
    double complex beta,
    Py_ssize_t n,
    cnp.ndarray k not None,
):
    """Apply the single-step wave-number transfer matrix ``n`` times.

    ``k`` is a 1-D array of wave numbers; the result has shape (2, len(k)).
    The inner loop works on split real/imaginary registers with the
    diagonal phase folded into the coin rows.
    """
    cdef cnp.ndarray[cnp.float64_t, ndim=1] kk = np.ascontiguousarray(k, dtype=np.float64)
    cdef Py_ssize_t m = kk.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] out = np.empty((2, m), dtype=np.complex128)
    cdef double complex[:, ::1] o = out
    cdef double[::1] kv = kk
    # grid-point updates are independent: keeping the grid loop innermost
    # lets the iterations pipeline instead of serializing on each step's
    # dependency chain
    cdef cnp.ndarray[cnp.float64_t, ndim=2] work = np.empty((6, m), dtype=np.float64)
    cdef double[:, ::1] wv = work
    cdef Py_ssize_t j, step
    cdef double ar = a.real, ai = a.imag, br = b.real, bi = b.imag
    cdef double cr = c.real, ci = c.imag, dr = d.real, di = d.imag
    cdef double co, si
    cdef double v1r, v1i, v2r, v2i, t1r, t1i, t2r, t2i
    for j in range(m):
        wv[0, j] = cos(kv[j])
        wv[1, j] = sin(kv[j])
        wv[2, j] = alpha.real
        wv[3, j] = alpha.imag
        wv[4, j] = beta.real
        wv[5, j] = beta.imag
    for step in range(n):
        for j in range(m):
            co = wv[0, j]
            si = wv[1, j]
            v1r = wv[2, j]
            v1i = wv[3, j]
            v2r = wv[4, j]
            v2i = wv[5, j]
            t1r = ar * v1r - ai * v1i + br * v2r - bi * v2i
            t1i = ar * v1i + ai * v1r + br * v2i + bi * v2r
            t2r = cr * v1r - ci * v1i + dr * v2r - di * v2i
            t2i = cr * v1i + ci * v1r + dr * v2i + di * v2r
            wv[2, j] = co * t1r - si * t1i
            wv[3, j] = co * t1i + si * t1r
            wv[4, j] = co * t2r + si * t2i
            wv[5, j] = co * t2i - si * t2r
    for j in range(m):
        o[0, j] = wv[2, j] + 1j * wv[3, j]
        o[1, j] = wv[4, j] + 1j * wv[5, j]
    return out
