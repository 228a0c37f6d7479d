"""Backend selection for the oracle's inner loops.

The compiled extension is used when it imports; otherwise the numpy
implementation takes over.  Both expose the same three functions.
"""

from __future__ import annotations

from types import ModuleType

import numpy as np

from angdecomp import _kernels_py

try:
    from angdecomp import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _kernels_py}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

BACKEND = "cython" if _compiled is not None else "python"
_active: ModuleType = BACKENDS[BACKEND]


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return _active
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def set_backend(name: str) -> None:
    """Switch the process-wide backend (used by the benchmark and tests)."""
    global _active, BACKEND
    _active = get_backend(name)
    BACKEND = name


def _f64(a):
    return np.ascontiguousarray(a, dtype=np.float64)


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64).reshape(-1, 3)


def legendre_values(ell: int, x) -> np.ndarray:
    return _active.legendre_values(int(ell), _f64(x))


def project_monomials(nodes, weights, u, ell: int, exps) -> np.ndarray:
    """(2 ell + 1) * sum_q w_q P_ell(node_q . u) * node_q**exps, one entry per exponent row."""
    return _active.project_monomials(_f64(nodes), _f64(weights), _f64(u), int(ell), _i64(exps))


def x_symbol_table(L: int, n: int, points, exps) -> np.ndarray:
    """Values of X^{L,n} at each point (rows) for each exponent triple (columns)."""
    return _active.x_symbol_table(int(L), int(n), _f64(points), _i64(exps))
