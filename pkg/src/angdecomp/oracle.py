"""Numerical and exact oracles, independent of the closed-form coefficients.

The main oracle projects the rank-L monomial onto angular momentum ell
with the Legendre projector

    (2 ell + 1) * integral dOmega'/(4 pi)  p'_{i1} ... p'_{iL} P_ell(p' . u)

evaluated by a product quadrature on the sphere (Gauss-Legendre in
cos(theta) times a uniform grid in phi).  The rule is exact for every
polynomial of degree up to ``exact_degree`` in the unit-vector
components, so only rounding error remains.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

import numpy as np

from angdecomp import kernels
from angdecomp.combinatorics import double_factorial
from angdecomp.errors import DomainError, ValidationError
from angdecomp.poly import Poly3
from angdecomp.tensor import (
    SymTensor,
    XCombo,
    _check_unit,
    enumerate_x_terms,
    exponent_triples,
    realize,
)

__all__ = [
    "QuadratureRule",
    "legendre",
    "gauss_legendre",
    "build_quadrature",
    "project_numeric",
    "project_combo",
    "angular_average",
    "integrate",
    "full_contraction",
    "random_unit_vectors",
    "laplacian_identity_check",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 20150629
NEWTON_TOL = 1e-15
NEWTON_MAX_ITER = 100


def legendre(ell: int, x: Any) -> Any:
    """P_ell(x) by the three-term recursion; exact when ``x`` is a Fraction."""
    if ell < 0:
        raise DomainError(f"Legendre degree must be non-negative, got {ell}")
    p0, p1 = x ** 0, x
    if ell == 0:
        return p0
    for k in range(2, ell + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1


def _legendre_and_derivative(m: int, x: float) -> tuple[float, float]:
    p0, p1 = 1.0, x
    for k in range(2, m + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1, m * (x * p1 - p0) / (x * x - 1.0)


def gauss_legendre(m: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].

    Roots are polished by Newton iteration on the Legendre recursion from
    the usual cosine initial guesses.
    """
    if m < 1:
        raise DomainError("need at least one node")
    nodes = np.empty(m)
    weights = np.empty(m)
    for i in range(m):
        x = math.cos(math.pi * (i + 0.75) / (m + 0.5))
        for _ in range(NEWTON_MAX_ITER):
            p, dp = _legendre_and_derivative(m, x)
            dx = p / dp
            x -= dx
            if abs(dx) < NEWTON_TOL:
                break
        _, dp = _legendre_and_derivative(m, x)
        nodes[i] = x
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(nodes)
    return nodes[order], weights[order]


@dataclass(frozen=True)
class QuadratureRule:
    """Sphere rule normalized to the mean: weights sum to one."""

    nodes: np.ndarray
    weights: np.ndarray
    exact_degree: int

    def __iter__(self):
        return zip(map(tuple, self.nodes), self.weights)

    def __len__(self) -> int:
        return len(self.weights)


@lru_cache(maxsize=64)
def build_quadrature(degree: int) -> QuadratureRule:
    if degree < 0:
        raise DomainError("quadrature degree must be non-negative")
    m = (degree + 2) // 2  # ceil((degree + 1) / 2): exact to 2m - 1 >= degree
    n_phi = degree + 1  # uniform phi grid integrates e^{ik phi}, |k| <= degree
    z, wz = gauss_legendre(m)
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    s = np.sqrt(1.0 - z * z)
    nodes = np.stack([
        np.outer(s, np.cos(phi)).ravel(),
        np.outer(s, np.sin(phi)).ravel(),
        np.repeat(z, n_phi),
    ], axis=1)
    weights = np.repeat(wz / 2.0, n_phi) / n_phi
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(np.ascontiguousarray(nodes), weights, degree)


@lru_cache(maxsize=None)
def _exps(L: int) -> np.ndarray:
    arr = np.array(exponent_triples(L), dtype=np.int64).reshape(-1, 3)
    arr.setflags(write=False)
    return arr


def _as_float_unit(u: Sequence[Any]) -> np.ndarray:
    return np.array(_check_unit(u, exact=False), dtype=float)


def project_numeric(L: int, ell: int, u: Sequence[Any],
                    rule: QuadratureRule | None = None) -> SymTensor:
    """Angular-momentum-ell part of the rank-L monomial at ``u``, by quadrature."""
    if L < 0 or ell < 0:
        raise DomainError("L and ell must be non-negative")
    if rule is None:
        rule = build_quadrature(L + ell)
    if rule.exact_degree < L + ell:
        raise ValidationError(f"quadrature exact to degree {rule.exact_degree}, "
                              f"projection needs {L + ell}")
    values = kernels.project_monomials(rule.nodes, rule.weights, _as_float_unit(u), ell, _exps(L))
    return SymTensor.from_array(L, values.tolist())


def combo_at_nodes(c: XCombo, points: np.ndarray) -> np.ndarray:
    """Values of an XCombo at many unit vectors, shape (N, components)."""
    exps = _exps(c.rank)
    out = np.zeros((points.shape[0], exps.shape[0]))
    for n, coeff in c.items():
        out += float(coeff) * kernels.x_symbol_table(c.rank, n, points, exps)
    return out


@lru_cache(maxsize=256)
def _default_table(c: XCombo, degree: int) -> np.ndarray:
    table = combo_at_nodes(c, build_quadrature(degree).nodes)
    table.setflags(write=False)
    return table


def project_combo(c: XCombo, ell: int, u: Sequence[Any],
                  rule: QuadratureRule | None = None) -> SymTensor:
    """Apply the ell projector to an XCombo viewed as a function of direction."""
    if rule is None:
        rule = build_quadrature(c.rank + ell)
        values = _default_table(c, c.rank + ell)
    elif rule.exact_degree < c.rank + ell:
        raise ValidationError(f"quadrature exact to degree {rule.exact_degree}, "
                              f"projection needs {c.rank + ell}")
    else:
        values = combo_at_nodes(c, rule.nodes)
    weights = rule.weights * kernels.legendre_values(ell, rule.nodes @ _as_float_unit(u))
    return SymTensor.from_array(c.rank, ((2 * ell + 1) * (weights @ values)).tolist())


def integrate(f_values: np.ndarray, rule: QuadratureRule) -> Any:
    """Mean over the sphere of tabulated values (first axis runs over nodes)."""
    return rule.weights @ f_values


def multinomial_weights(L: int) -> np.ndarray:
    """Number of Cartesian index tuples realizing each exponent triple."""
    f = math.factorial
    return np.array([f(L) // (f(a) * f(b) * f(c)) for a, b, c in exponent_triples(L)], dtype=float)


def full_contraction(a: np.ndarray, b: np.ndarray, L: int) -> np.ndarray:
    """Sum over all 3**L index tuples of A * B, for stacked component arrays."""
    return (a * b) @ multinomial_weights(L)


def angular_average(N: int) -> XCombo:
    """Mean of the rank-N monomial over the unit sphere: X^{N,0}/(N+1)!! for even N."""
    if N < 0:
        raise DomainError("rank must be non-negative")
    if N % 2:
        return XCombo.zero(N)
    return XCombo(N, {0: Fraction(1, double_factorial(N + 1))})


def random_unit_vectors(count: int, seed: int = DEFAULT_SEED) -> np.ndarray:
    """Uniform points on the sphere: cos(theta) and phi drawn by inverse CDF."""
    rng = np.random.default_rng(seed)
    z = rng.uniform(-1.0, 1.0, count)
    phi = rng.uniform(0.0, 2.0 * math.pi, count)
    s = np.sqrt(1.0 - z * z)
    return np.stack([s * np.cos(phi), s * np.sin(phi), z], axis=1)


def _x_symbol_polynomial(L: int, m: int, indices: tuple[int, ...]) -> Poly3:
    """X^{L,m} with the unit vector replaced by the raw vector p, at one index tuple."""
    total = Poly3.zero()
    for momenta, pairs in enumerate_x_terms(L, m):
        if any(indices[i] != indices[j] for i, j in pairs):
            continue
        exps = [0, 0, 0]
        for pos in momenta:
            exps[indices[pos]] += 1
        total = total + Poly3.monomial(exps)
    return total


def laplacian_identity_check(L: int, n: int) -> bool:
    """Exactly verify Lap^n p_{i1}...p_{iL} = 2^n n! p^{L-2n} X^{L,L-2n} per component.

    The factor p^{L-2n} absorbs the normalization of the L-2n unit vectors
    in X, so the right side is X^{L,L-2n} built directly from p.
    """
    if n < 0 or 2 * n > L:
        raise DomainError(f"need 0 <= 2n <= L, got L={L}, n={n}")
    scale = 2 ** n * math.factorial(n)
    for triple in exponent_triples(L):
        lhs = Poly3.monomial(triple)
        for _ in range(n):
            lhs = lhs.laplacian()
        rhs = _x_symbol_polynomial(L, L - 2 * n, realize(triple)).scale(scale)
        if lhs != rhs:
            return False
    return True
