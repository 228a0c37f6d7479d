"""Symmetric rank-L tensors over three dimensions and the X-symbol algebra.

``X^{L,n}`` is the fully symmetric rank-L structure built from ``n``
copies of a unit vector and ``(L-n)/2`` Kronecker deltas, summed over
all distinct index assignments.  An :class:`XCombo` is a linear
combination ``sum_n c_n X^{L,n}`` with exact coefficients; all
identities act on these coefficient maps only.  Expanded terms are
enumerated on demand for the brute-force checks.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isclose
from numbers import Rational as _RationalABC
from typing import Any

import numpy as np

from angdecomp.combinatorics import double_factorial, kappa
from angdecomp.errors import DomainError, ValidationError

MultiIndex = tuple[int, int, int]
Term = tuple[tuple[int, ...], tuple[tuple[int, int], ...]]

UNIT_TOLERANCE = 1e-12

__all__ = [
    "MultiIndex",
    "SymTensor",
    "XCombo",
    "exponent_triples",
    "realize",
    "x_term_count",
    "enumerate_x_terms",
    "evaluate_x",
    "evaluate_combo",
    "combo_contract_vector",
    "combo_trace",
    "combo_multiply_sym",
]


def _check_rank_pair(L: int, n: int) -> None:
    if L < 0 or n < 0 or n > L or (L - n) % 2:
        raise DomainError(f"X^{{{L},{n}}} needs 0 <= n <= L with L - n even")


def exponent_triples(L: int) -> list[MultiIndex]:
    """All (a, b, c) with a + b + c = L, in lexicographic order."""
    return [(a, b, L - a - b) for a in range(L + 1) for b in range(L - a + 1)]


def realize(triple: MultiIndex) -> tuple[int, ...]:
    """A Cartesian index tuple (0 = x, 1 = y, 2 = z) with the given exponent counts."""
    a, b, c = triple
    return (0,) * a + (1,) * b + (2,) * c


def triple_of(indices: Sequence[int]) -> MultiIndex:
    return (indices.count(0), indices.count(1), indices.count(2))


@dataclass(frozen=True)
class SymTensor:
    """Fully symmetric rank-L tensor in 3D, stored by exponent triple.

    ``exact`` tags whether the components are Fractions or floats.
    """

    rank: int
    components: Mapping[MultiIndex, Any]
    exact: bool = True

    def __post_init__(self) -> None:
        if len(self.components) != (self.rank + 1) * (self.rank + 2) // 2:
            raise ValueError(f"rank-{self.rank} symmetric tensor needs "
                             f"{(self.rank + 1) * (self.rank + 2) // 2} components")

    @classmethod
    def zeros(cls, rank: int, exact: bool = True) -> SymTensor:
        zero = Fraction(0) if exact else 0.0
        return cls(rank, {t: zero for t in exponent_triples(rank)}, exact)

    @classmethod
    def from_array(cls, rank: int, values: Sequence[Any], exact: bool = False) -> SymTensor:
        """Build from a flat sequence ordered like :func:`exponent_triples`."""
        return cls(rank, dict(zip(exponent_triples(rank), values)), exact)

    def __getitem__(self, triple: MultiIndex) -> Any:
        return self.components[tuple(triple)]

    def at(self, *indices: int) -> Any:
        """Value at a Cartesian index tuple such as ``T.at(0, 2, 2)``."""
        if len(indices) != self.rank:
            raise IndexError(f"expected {self.rank} indices, got {len(indices)}")
        return self.components[triple_of(list(indices))]

    def values(self) -> list[Any]:
        return [self.components[t] for t in exponent_triples(self.rank)]

    def to_numpy(self) -> np.ndarray:
        return np.array([float(v) for v in self.values()])

    def to_full(self) -> np.ndarray:
        """Dense 3**rank array; only sensible for small ranks."""
        out = np.empty((3,) * self.rank, dtype=object if self.exact else float)
        for idx in np.ndindex(*out.shape):
            out[idx] = self.components[triple_of(list(idx))]
        return out

    def max_abs(self) -> float:
        return max((abs(float(v)) for v in self.components.values()), default=0.0)

    def max_abs_diff(self, other: SymTensor) -> float:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return max(abs(float(self.components[t]) - float(other.components[t]))
                   for t in self.components)

    def __add__(self, other: SymTensor) -> SymTensor:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return SymTensor(self.rank, {t: v + other.components[t] for t, v in self.components.items()},
                         self.exact and other.exact)

    def scaled(self, factor: Any) -> SymTensor:
        exact = self.exact and isinstance(factor, _RationalABC)
        return SymTensor(self.rank, {t: v * factor for t, v in self.components.items()}, exact)

    def contract_vector(self, u: Sequence[Any]) -> SymTensor:
        """Contract the last index with ``u``."""
        if self.rank < 1:
            raise DomainError("cannot contract a rank-0 tensor")
        out = {}
        for a, b, c in exponent_triples(self.rank - 1):
            t = self.components
            out[(a, b, c)] = t[(a + 1, b, c)] * u[0] + t[(a, b + 1, c)] * u[1] + t[(a, b, c + 1)] * u[2]
        return SymTensor(self.rank - 1, out, self.exact)

    def trace(self) -> SymTensor:
        """Contract the last two indices with a Kronecker delta."""
        if self.rank < 2:
            raise DomainError("trace needs rank >= 2")
        t = self.components
        out = {(a, b, c): t[(a + 2, b, c)] + t[(a, b + 2, c)] + t[(a, b, c + 2)]
               for a, b, c in exponent_triples(self.rank - 2)}
        return SymTensor(self.rank - 2, out, self.exact)


def _normalize_coeffs(rank: int, coeffs: Mapping[int, Any]) -> dict[int, Fraction]:
    clean: dict[int, Fraction] = {}
    for n, value in coeffs.items():
        n = int(n)
        value = Fraction(value)
        if value == 0:
            continue
        if n < 0 or n > rank or (rank - n) % 2:
            raise DomainError(f"XCombo of rank {rank} cannot carry X^{{{rank},{n}}}")
        clean[n] = value
    return dict(sorted(clean.items(), reverse=True))


@dataclass(frozen=True)
class XCombo:
    """Exact linear combination ``sum_n coeffs[n] * X^{rank,n}``.

    Zero coefficients are dropped, and keys are kept in descending order.
    Instances are hashable and compare structurally.
    """

    rank: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise DomainError(f"rank must be non-negative, got {self.rank}")
        object.__setattr__(self, "coeffs", _normalize_coeffs(self.rank, self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> XCombo:
        return cls(rank, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs.get(n, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.coeffs.items())

    def __hash__(self) -> int:
        return hash((self.rank, tuple(self.coeffs.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XCombo):
            return NotImplemented
        return self.rank == other.rank and self.coeffs == other.coeffs

    def _merge(self, other: XCombo, factor: int) -> XCombo:
        if other.rank != self.rank:
            raise DomainError(f"cannot add XCombos of rank {self.rank} and {other.rank}")
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, 0) + factor * c
        return XCombo(self.rank, out)

    def __add__(self, other: XCombo) -> XCombo:
        return self._merge(other, 1)

    def __sub__(self, other: XCombo) -> XCombo:
        return self._merge(other, -1)

    def __mul__(self, factor: Any) -> XCombo:
        factor = Fraction(factor)
        return XCombo(self.rank, {n: c * factor for n, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> XCombo:
        return self * -1

    def __repr__(self) -> str:
        body = ", ".join(f"{n}: {c}" for n, c in self.coeffs.items())
        return f"XCombo(rank={self.rank}, {{{body}}})"


def x_term_count(L: int, n: int) -> int:
    """Number of distinct terms in X^{L,n}: binom(L, n) * (L-n-1)!!."""
    _check_rank_pair(L, n)
    return comb(L, n) * double_factorial(L - n - 1)


def _pairings(positions: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    # lowest unpaired position first
    if not positions:
        yield ()
        return
    first, rest = positions[0], positions[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in _pairings(remaining):
            yield ((first, partner),) + tail


def enumerate_x_terms(L: int, n: int) -> list[Term]:
    """Every term of X^{L,n} as (unit-vector positions, delta pairs).

    Positions are 0-based.  Subsets come in lexicographic order and the
    remaining positions are paired lowest-first, so the enumeration is
    deterministic and free of duplicates.
    """
    from itertools import combinations

    _check_rank_pair(L, n)
    terms: list[Term] = []
    for chosen in combinations(range(L), n):
        rest = tuple(i for i in range(L) if i not in chosen)
        terms.extend((chosen, pairs) for pairs in _pairings(rest))
    return terms


def _is_exact(u: Sequence[Any]) -> bool:
    return all(isinstance(x, _RationalABC) for x in u)


def _check_unit(u: Sequence[Any], exact: bool) -> list[Any]:
    if len(u) != 3:
        raise ValidationError(f"expected a 3-vector, got {len(u)} components")
    if exact:
        vec = [Fraction(x) for x in u]
        if sum(x * x for x in vec) != 1:
            raise ValidationError(f"rational vector {tuple(map(str, vec))} is not a unit vector")
        return vec
    vec = [float(x) for x in u]
    norm = sum(x * x for x in vec) ** 0.5
    if not isclose(norm, 1.0, rel_tol=0.0, abs_tol=UNIT_TOLERANCE):
        raise ValidationError(f"|u| = {norm!r} differs from 1 by more than {UNIT_TOLERANCE}")
    return vec


def _x_component(L: int, n: int, triple: MultiIndex, u: Sequence[Any], one: Any) -> Any:
    # Count the terms of X^{L,n} surviving at this index realization: choose
    # i, j, k unit-vector slots among the a, b, c copies of each axis and
    # pair the rest within each axis.
    a, b, c = triple
    df = double_factorial
    total = one * 0
    for i in range(min(a, n) + 1):
        if (a - i) % 2:
            continue
        wa = comb(a, i) * df(a - i - 1)
        for j in range(min(b, n - i) + 1):
            k = n - i - j
            if k > c or (b - j) % 2 or (c - k) % 2:
                continue
            weight = wa * comb(b, j) * df(b - j - 1) * comb(c, k) * df(c - k - 1)
            total += weight * u[0] ** i * u[1] ** j * u[2] ** k
    return total


def _resolve_kind(u: Sequence[Any], kind: str) -> bool:
    if kind == "auto":
        return _is_exact(u)
    if kind not in ("exact", "float"):
        raise ValueError(f"kind must be 'auto', 'exact' or 'float', got {kind!r}")
    return kind == "exact"


def evaluate_x(L: int, n: int, u: Sequence[Any], kind: str = "auto") -> SymTensor:
    """Numeric (or exact) value of X^{L,n} at the unit vector ``u``.

    Each component equals the sum over :func:`enumerate_x_terms` of the
    products of u-components and Kronecker deltas; it is computed by
    counting surviving terms per axis instead of enumerating them.
    """
    _check_rank_pair(L, n)
    exact = _resolve_kind(u, kind)
    vec = _check_unit(u, exact)
    one = Fraction(1) if exact else 1.0
    return SymTensor(L, {t: _x_component(L, n, t, vec, one) for t in exponent_triples(L)}, exact)


def evaluate_combo(c: XCombo, u: Sequence[Any], kind: str = "auto") -> SymTensor:
    """Linear combination of :func:`evaluate_x` values."""
    exact = _resolve_kind(u, kind)
    vec = _check_unit(u, exact)
    one = Fraction(1) if exact else 1.0
    out = {}
    for t in exponent_triples(c.rank):
        total = one * 0
        for n, coeff in c.items():
            total += (coeff if exact else float(coeff)) * _x_component(c.rank, n, t, vec, one)
        out[t] = total
    return SymTensor(c.rank, out, exact)


def combo_contract_vector(c: XCombo) -> XCombo:
    """Contract one index with the unit vector: X^{L,l} u = (l+1) X^{L-1,l+1} + X^{L-1,l-1}."""
    if c.rank < 1:
        raise DomainError("contraction with the unit vector needs rank >= 1")
    L = c.rank - 1
    out: dict[int, Fraction] = {}
    for n, coeff in c.items():
        if n + 1 <= L:
            out[n + 1] = out.get(n + 1, 0) + (n + 1) * coeff
        if n - 1 >= 0:
            out[n - 1] = out.get(n - 1, 0) + coeff
    return XCombo(L, out)


def combo_trace(c: XCombo) -> XCombo:
    """Trace over one index pair: X^{L,l} delta = (L+l+1) X^{L-2,l} + X^{L-2,l-2}."""
    if c.rank < 2:
        raise DomainError("trace needs rank >= 2")
    L = c.rank
    out: dict[int, Fraction] = {}
    for n, coeff in c.items():
        if n <= L - 2:
            out[n] = out.get(n, 0) + (L + n + 1) * coeff
        if n >= 2:
            out[n - 2] = out.get(n - 2, 0) + coeff
    return XCombo(L - 2, out)


def combo_multiply_sym(a: XCombo, b: XCombo) -> XCombo:
    """Symmetrized product over all binom(L+N, L) ways of splitting the indices."""
    out: dict[int, Fraction] = {}
    for ell, ca in a.items():
        for n, cb in b.items():
            out[ell + n] = out.get(ell + n, 0) + ca * cb * kappa(a.rank, ell, b.rank, n)
    return XCombo(a.rank + b.rank, out)
