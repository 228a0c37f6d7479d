# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for the numerical oracle.

Signatures and semantics match :mod:`angdecomp._kernels_py` exactly.
"""

import numpy as np


cdef inline double _legendre(int ell, double x) nogil:
    cdef double p0 = 1.0, p1 = x, p2
    cdef int k
    if ell == 0:
        return p0
    for k in range(2, ell + 1):
        p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        p0 = p1
        p1 = p2
    return p1


def legendre_values(int ell, const double[::1] x):
    cdef Py_ssize_t i, n = x.shape[0]
    out = np.empty(n)
    cdef double[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _legendre(ell, x[i])
    return out


def project_monomials(const double[:, ::1] nodes, const double[::1] weights,
                      const double[::1] u, int ell, const long long[:, ::1] exps):
    cdef Py_ssize_t q, k, j, N = nodes.shape[0], K = exps.shape[0]
    cdef int top = 0
    for k in range(K):
        j = exps[k, 0] + exps[k, 1] + exps[k, 2]
        if j > top:
            top = <int>j
    out = np.zeros(K)
    cdef double[::1] o = out
    powers = np.empty((3, top + 1))
    cdef double[:, ::1] pw = powers
    cdef double w, t
    cdef int axis
    with nogil:
        for q in range(N):
            t = nodes[q, 0] * u[0] + nodes[q, 1] * u[1] + nodes[q, 2] * u[2]
            w = weights[q] * _legendre(ell, t)
            for axis in range(3):
                pw[axis, 0] = 1.0
                for j in range(1, top + 1):
                    pw[axis, j] = pw[axis, j - 1] * nodes[q, axis]
            for k in range(K):
                o[k] += w * pw[0, exps[k, 0]] * pw[1, exps[k, 1]] * pw[2, exps[k, 2]]
        for k in range(K):
            o[k] *= 2 * ell + 1
    return out


def _pair_weights(int L):
    # w[a, i] = binom(a, i) * (a - i - 1)!! when a - i is even, else 0
    from math import comb
    w = np.zeros((L + 1, L + 1))
    cdef int a, i, m
    cdef double df
    for a in range(L + 1):
        for i in range(a + 1):
            if (a - i) % 2 == 0:
                df = 1.0
                m = a - i - 1
                while m > 1:
                    df *= m
                    m -= 2
                w[a, i] = comb(a, i) * df
    return w


def x_symbol_table(int L, int n, const double[:, ::1] points, const long long[:, ::1] exps):
    cdef Py_ssize_t q, k, N = points.shape[0], K = exps.shape[0]
    cdef int a, b, c, i, j, m, axis
    weights = _pair_weights(L)
    cdef double[:, ::1] pwt = weights
    out = np.zeros((N, K))
    cdef double[:, ::1] o = out
    powers = np.empty((3, L + 1))
    cdef double[:, ::1] pw = powers
    cdef double total, wa
    with nogil:
        for q in range(N):
            for axis in range(3):
                pw[axis, 0] = 1.0
                for j in range(1, L + 1):
                    pw[axis, j] = pw[axis, j - 1] * points[q, axis]
            for k in range(K):
                a = <int>exps[k, 0]
                b = <int>exps[k, 1]
                c = <int>exps[k, 2]
                total = 0.0
                for i in range(min(a, n) + 1):
                    wa = pwt[a, i]
                    if wa == 0.0:
                        continue
                    for j in range(min(b, n - i) + 1):
                        m = n - i - j
                        if m > c:
                            continue
                        total += (wa * pwt[b, j] * pwt[c, m]
                                  * pw[0, i] * pw[1, j] * pw[2, m])
                o[q, k] = total
    return out
