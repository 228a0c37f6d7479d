"""Pure-Python (numpy) versions of the oracle kernels.

Used when the compiled extension is unavailable; also the reference the
compiled kernels are tested against.
"""

from __future__ import annotations

from math import comb

import numpy as np


def legendre_values(ell: int, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    p0 = np.ones_like(x)
    if ell == 0:
        return p0
    p1 = x.copy()
    for k in range(2, ell + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1


def _power_table(points: np.ndarray, top: int) -> np.ndarray:
    # (N, 3, top+1) with [q, axis, j] = points[q, axis]**j
    return points[:, :, None] ** np.arange(top + 1)[None, None, :]


def project_monomials(nodes: np.ndarray, weights: np.ndarray, u: np.ndarray, ell: int,
                      exps: np.ndarray) -> np.ndarray:
    top = int(exps.sum(axis=1).max()) if len(exps) else 0
    pw = _power_table(nodes, top)
    mono = pw[:, 0, exps[:, 0]] * pw[:, 1, exps[:, 1]] * pw[:, 2, exps[:, 2]]
    w = weights * legendre_values(ell, nodes @ u)
    return (2 * ell + 1) * (w @ mono)


def _pair_weights(L: int) -> np.ndarray:
    w = np.zeros((L + 1, L + 1))
    for a in range(L + 1):
        for i in range(a % 2, a + 1, 2):
            w[a, i] = comb(a, i) * np.prod(np.arange(a - i - 1, 0, -2), dtype=float)
    return w


def x_symbol_table(L: int, n: int, points: np.ndarray, exps: np.ndarray) -> np.ndarray:
    pwt = _pair_weights(L)
    pw = _power_table(points, L)
    out = np.zeros((points.shape[0], exps.shape[0]))
    for k, (a, b, c) in enumerate(exps):
        for i in range(min(a, n) + 1):
            if pwt[a, i] == 0.0:
                continue
            for j in range(min(b, n - i) + 1):
                m = n - i - j
                if m > c:
                    continue
                weight = pwt[a, i] * pwt[b, j] * pwt[c, m]
                if weight:
                    out[:, k] += weight * pw[:, 0, i] * pw[:, 1, j] * pw[:, 2, m]
    return out
