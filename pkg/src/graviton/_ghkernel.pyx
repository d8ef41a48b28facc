# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled Gibbons-Hawking field sums; same contract as ``_ghkernel_py``."""

import numpy as np
from libc.math cimport sqrt, INFINITY


def potential_terms(const double[:, ::1] points, const double[:, ::1] x):
    cdef Py_ssize_t N = x.shape[0], m = points.shape[0], i, j, a, b
    V = np.zeros(N)
    grad = np.zeros((N, 3))
    hess = np.zeros((N, 3, 3))
    rmin = np.empty(N)
    cdef double[::1] Vv = V
    cdef double[:, ::1] G = grad
    cdef double[:, :, ::1] H = hess
    cdef double[::1] R = rmin
    cdef double d[3]
    cdef double r2, r, ir, ir3, ir5, best
    with nogil:
        for i in range(N):
            best = INFINITY
            for j in range(m):
                r2 = 0.0
                for a in range(3):
                    d[a] = x[i, a] - points[j, a]
                    r2 = r2 + d[a] * d[a]
                r = sqrt(r2)
                if r < best:
                    best = r
                ir = 1.0 / r
                ir3 = ir * ir * ir
                ir5 = ir3 * ir * ir
                Vv[i] += 0.5 * ir
                for a in range(3):
                    G[i, a] -= 0.5 * d[a] * ir3
                    for b in range(3):
                        H[i, a, b] += 1.5 * d[a] * d[b] * ir5
                    H[i, a, a] -= 0.5 * ir3
            R[i] = best
    return V, grad, hess, rmin


def center_terms(const double[:, ::1] points, const double[:, ::1] x):
    cdef Py_ssize_t N = x.shape[0], m = points.shape[0], i, j, a
    Vi = np.empty((N, m))
    gVi = np.empty((N, m, 3))
    cdef double[:, ::1] P = Vi
    cdef double[:, :, ::1] Q = gVi
    cdef double d[3]
    cdef double r2, ir, ir3
    with nogil:
        for i in range(N):
            for j in range(m):
                r2 = 0.0
                for a in range(3):
                    d[a] = x[i, a] - points[j, a]
                    r2 = r2 + d[a] * d[a]
                ir = 1.0 / sqrt(r2)
                ir3 = ir * ir * ir
                P[i, j] = 0.5 * ir
                for a in range(3):
                    Q[i, j, a] = -0.5 * d[a] * ir3
    return Vi, gVi


def gauge_terms(const double[:, ::1] points, const double[:, ::1] x, const double[::1] direction):
    cdef Py_ssize_t N = x.shape[0], m = points.shape[0], i, j, a
    A = np.zeros((N, 3))
    margin = np.empty(N)
    cdef double[:, ::1] Av = A
    cdef double[::1] Mv = margin
    cdef double d[3]
    cdef double c[3]
    cdef double n0 = direction[0], n1 = direction[1], n2 = direction[2]
    cdef double r2, r, nd, f, best, mg
    with nogil:
        for i in range(N):
            best = INFINITY
            for j in range(m):
                r2 = 0.0
                for a in range(3):
                    d[a] = x[i, a] - points[j, a]
                    r2 = r2 + d[a] * d[a]
                r = sqrt(r2)
                nd = n0 * d[0] + n1 * d[1] + n2 * d[2]
                mg = 1.0 + nd / r
                if mg < best:
                    best = mg
                c[0] = n1 * d[2] - n2 * d[1]
                c[1] = n2 * d[0] - n0 * d[2]
                c[2] = n0 * d[1] - n1 * d[0]
                f = -0.5 / (r * (r + nd))
                for a in range(3):
                    Av[i, a] += f * c[a]
            Mv[i] = best
    return A, margin
