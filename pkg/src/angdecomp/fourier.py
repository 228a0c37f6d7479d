"""Symbolic 3D Fourier transforms of p^n times a rank-L unit-vector monomial.

The monomial is split into angular-momentum channels; channel ell picks up
the radial transform of p^n on that channel and the same angular
structure in the position-space unit vector:

    int d^3p/(2 pi)^3 e^{i p.r} p^n (p^...p^)_ell
        = i^ell/(2 pi^2) R_{n ell}(r) (x^...x^)_ell

with R_{n ell} = chi_{n ell} / r^{n+3} for -(ell+3) < n < ell and
R_{ell ell} = 2 pi^2 (2 ell + 1)!! delta^3(r) / r^ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from angdecomp.combinatorics import PiScaled, chi, double_factorial, format_scaled, sign
from angdecomp.decomposition import all_components, max_component
from angdecomp.errors import DivergentError, DomainError, NotIntegrableError, TransformDomainError
from angdecomp.poly import Poly3, RadialPoly
from angdecomp.tensor import XCombo, enumerate_x_terms, exponent_triples, realize

__all__ = [
    "RadialTerm",
    "Channel",
    "FourierResult",
    "DerivativeIdentity",
    "radial_factor",
    "fourier_transform",
    "derivative_identity_onebyr",
    "derivative_identity_delta",
    "apply_traceless_derivative",
    "onebyr_identity_holds",
]

DELTA_CONVENTION = (
    "delta3(r)/r^ell is a formal distribution: the angular integral is done "
    "before the radial one, so it acts only through its spherical average."
)


@dataclass(frozen=True)
class RadialTerm:
    """One channel's radial behaviour.

    ``kind == "power"``: coefficient / r**r_power.
    ``kind == "delta"``: coefficient * delta3(r) / r**r_power (a formal token,
    never evaluated numerically; see ``DELTA_CONVENTION``).
    """

    kind: Literal["power", "delta"]
    coefficient: PiScaled
    r_power: int

    def __str__(self) -> str:
        value, pi_power, imag = self.coefficient.canonical()
        if self.kind == "power":
            rp = "r" if self.r_power == 1 else f"r^{self.r_power}"
            return format_scaled(value, pi_power, imag, rp if self.r_power else None)
        token = "delta3(r)" if self.r_power == 0 else f"delta3(r)/r^{self.r_power}"
        if (value, pi_power, imag) == (1, 0, 0):
            return token
        return f"({format_scaled(value, pi_power, imag)}) {token}"


@dataclass(frozen=True)
class Channel:
    ell: int
    radial: RadialTerm
    angular: XCombo


@dataclass(frozen=True)
class FourierResult:
    n: int
    rank: int
    channels: tuple[Channel, ...]


def radial_factor(n: int, ell: int) -> RadialTerm:
    """Transform of p^n on channel ell, including the i^ell/(2 pi^2) prefactor."""
    if ell < 0:
        raise DomainError(f"ell must be non-negative, got {ell}")
    if n <= -(ell + 3):
        raise NotIntegrableError(n, ell)
    if n > ell:
        raise DivergentError(n, ell)
    if n == ell:
        # 1/(2 pi^2) cancels the 2 pi^2 of the delta-function integral
        return RadialTerm("delta", PiScaled(double_factorial(2 * ell + 1), 0, ell), ell)
    prefactor = PiScaled(Fraction(1, 2), -2, ell)
    return RadialTerm("power", prefactor * chi(n, ell), n + 3)


def fourier_transform(n: int, L: int) -> FourierResult:
    if L < 0:
        raise DomainError(f"rank must be non-negative, got {L}")
    channels = []
    for ell, angular in all_components(L):
        try:
            radial = radial_factor(n, ell)
        except TransformDomainError as exc:
            exc.rank = L  # exc.ell already names the offending channel
            raise
        channels.append(Channel(ell, radial, angular))
    return FourierResult(n, L, tuple(channels))


@dataclass(frozen=True)
class DerivativeIdentity:
    """(d_{i1}...d_{ik})_k applied to ``source`` equals
    coefficient / r**r_power * angular(x^) [* delta3(r) when ``delta``]."""

    source: Literal["onebyr", "delta"]
    k: int
    coefficient: Fraction
    r_power: int
    angular: XCombo
    delta: bool

    def __str__(self) -> str:
        src = "(1/r)" if self.source == "onebyr" else "delta3(r)"
        c = self.coefficient
        mag = f"{abs(c)}/r^{self.r_power}"
        tail = " delta3(r)" if self.delta else ""
        return (f"(d^{self.k})_{self.k} {src} = {'-' if c < 0 else '+'}{mag} "
                f"(x^{self.k})_{self.k}{tail}")


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"derivative order must be >= 1, got {k}")


def derivative_identity_onebyr(k: int) -> DerivativeIdentity:
    """Traceless k-th derivative of 1/r, valid away from the origin.

    For k >= 2 the distributional delta terms at r = 0 (as in the familiar
    d_i d_j (1/r) identity) are not part of this statement.
    """
    _check_k(k)
    return DerivativeIdentity("onebyr", k, Fraction(sign(k) * double_factorial(2 * k - 1)),
                              k + 1, max_component(k), False)


def derivative_identity_delta(k: int) -> DerivativeIdentity:
    _check_k(k)
    return DerivativeIdentity("delta", k, Fraction(sign(k) * double_factorial(2 * k + 1)),
                              k, max_component(k), True)


def apply_traceless_derivative(k: int, f: RadialPoly) -> dict[tuple[int, int, int], RadialPoly]:
    """(d_{i1}...d_{ik})_k f, one RadialPoly per exponent triple.

    Each X^{k,n} term becomes n partial derivatives times (k-n)/2
    Laplacians, since p^k X^{k,n}(p^) carries p^{k-n} = (p^2)^{(k-n)/2}.
    """
    combo = max_component(k)
    cache: dict[tuple[int, int, int, int], RadialPoly] = {}

    def derived(counts: tuple[int, int, int], laps: int) -> RadialPoly:
        key = (*counts, laps)
        if key not in cache:
            g = f
            for axis, times in enumerate(counts):
                for _ in range(times):
                    g = g.diff(axis)
            for _ in range(laps):
                g = g.laplacian()
            cache[key] = g
        return cache[key]

    out = {}
    for triple in exponent_triples(k):
        idx = realize(triple)
        total = RadialPoly({})
        for n, coeff in combo.items():
            for momenta, pairs in enumerate_x_terms(k, n):
                if any(idx[i] != idx[j] for i, j in pairs):
                    continue
                counts = [0, 0, 0]
                for pos in momenta:
                    counts[idx[pos]] += 1
                total = total + derived(tuple(counts), (k - n) // 2).scale(coeff)
        out[triple] = total
    return out


def _identity_rhs(ident: DerivativeIdentity, triple: tuple[int, int, int]) -> RadialPoly:
    # coefficient / r^p * sum_n c_n X^{k,n}(x/r): each unit vector adds 1/r
    idx = realize(triple)
    total = RadialPoly({})
    for n, coeff in ident.angular.items():
        for momenta, pairs in enumerate_x_terms(ident.k, n):
            if any(idx[i] != idx[j] for i, j in pairs):
                continue
            exps = [0, 0, 0]
            for pos in momenta:
                exps[idx[pos]] += 1
            total = total + RadialPoly({ident.r_power + n: Poly3.monomial(exps, coeff)})
    return total.scale(ident.coefficient)


def onebyr_identity_holds(k: int) -> bool:
    """Exact symbolic check of :func:`derivative_identity_onebyr` away from r = 0."""
    ident = derivative_identity_onebyr(k)
    lhs = apply_traceless_derivative(k, RadialPoly.inverse_r_power(1))
    return all(lhs[t].equals(_identity_rhs(ident, t)) for t in exponent_triples(k))
