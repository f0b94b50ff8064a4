# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: pointwise Horner evaluation and the O(N^2) series
recurrences.  Mirrors ``_fallback`` exactly."""

import numpy as np


def horner_many(const double complex[::1] coeffs, const double complex[::1] points):
    # four independent accumulator chains per pass hide the multiply-add
    # latency of the otherwise serial Horner recurrence
    cdef Py_ssize_t n = coeffs.shape[0]
    cdef Py_ssize_t m = points.shape[0]
    out = np.empty(m, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t i = 0, k
    cdef double complex a0, a1, a2, a3, z0, z1, z2, z3, c
    while i + 4 <= m:
        z0 = points[i]
        z1 = points[i + 1]
        z2 = points[i + 2]
        z3 = points[i + 3]
        a0 = a1 = a2 = a3 = 0
        for k in range(n - 1, -1, -1):
            c = coeffs[k]
            a0 = a0 * z0 + c
            a1 = a1 * z1 + c
            a2 = a2 * z2 + c
            a3 = a3 * z3 + c
        o[i] = a0
        o[i + 1] = a1
        o[i + 2] = a2
        o[i + 3] = a3
        i += 4
    while i < m:
        z0 = points[i]
        a0 = 0
        for k in range(n - 1, -1, -1):
            a0 = a0 * z0 + coeffs[k]
        o[i] = a0
        i += 1
    return out


def cauchy_product(const double complex[::1] a, const double complex[::1] b):
    # j-outer keeps the inner updates independent, so they vectorize
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef Py_ssize_t j, i
    cdef double complex aj
    for j in range(n):
        aj = a[j]
        for i in range(n - j):
            o[j + i] = o[j + i] + aj * b[i]
    return out


def series_reciprocal(const double complex[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] o = out
    cdef double complex inv0 = 1.0 / a[0]
    cdef double complex s
    cdef Py_ssize_t k, j
    o[0] = inv0
    for k in range(1, n):
        s = 0
        for j in range(1, k + 1):
            s = s + a[j] * o[k - j]
        o[k] = -inv0 * s
    return out
