"""Exact integer and rational building blocks.

Every coefficient that appears in the decomposition and in the radial
transform factors is produced here as a :class:`fractions.Fraction`
(numerator and denominator are Python ints, always reduced, denominator
positive).  Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
from math import comb, factorial

from angdecomp.errors import DivergentError, DomainError, NotIntegrableError

Rational = Fraction

__all__ = [
    "Rational",
    "PiScaled",
    "double_factorial",
    "decomp_coefficient",
    "max_component_coefficient",
    "kappa",
    "chi",
    "sign",
]


def sign(k: int) -> int:
    """(-1)**k for integer k."""
    return -1 if k % 2 else 1


@lru_cache(maxsize=None)
def double_factorial(k: int) -> int:
    """k!! = k (k-2) (k-4) ..., with (-1)!! = 0!! = 1."""
    if k < -1:
        raise DomainError(f"double factorial needs k >= -1, got {k}")
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def _require_parity(big: int, small: int, what: str) -> None:
    if small < 0 or big < 0:
        raise DomainError(f"{what}: arguments must be non-negative, got ({big}, {small})")
    if small > big:
        raise DomainError(f"{what}: need {small} <= {big}")
    if (big - small) % 2:
        raise DomainError(f"{what}: {big} and {small} must have equal parity")


def decomp_coefficient(L: int, ell: int, n: int) -> Fraction:
    """Coefficient of X^{L,n} in the angular-momentum-ell part of the rank-L monomial."""
    _require_parity(L, ell, "decomp_coefficient(L, ell)")
    _require_parity(ell, n, "decomp_coefficient(ell, n)")
    df = double_factorial
    prefactor = Fraction((2 * ell + 1) * df(L - ell - 1),
                         factorial(L - ell) * df(L + ell + 1))
    term = Fraction(factorial(L - n) * df(ell + n - 1) * df(ell - n - 1),
                    factorial(ell - n) * df(L - n - 1))
    return sign((ell - n) // 2) * prefactor * term


def max_component_coefficient(L: int, n: int) -> Fraction:
    """Coefficient of X^{L,n} in the traceless (ell = L) component."""
    _require_parity(L, n, "max_component_coefficient")
    return sign((L - n) // 2) * Fraction(double_factorial(L + n - 1),
                                         double_factorial(2 * L - 1))


def kappa(L: int, ell: int, N: int, n: int) -> Fraction:
    """Proportionality constant of the symmetrized product X^{L,ell} X^{N,n} -> X^{L+N,ell+n}.

    Obtained by counting terms on both sides; every term enters with
    coefficient one so the ratio of the counts is the constant.
    """
    _require_parity(L, ell, "kappa(L, ell)")
    _require_parity(N, n, "kappa(N, n)")
    df = double_factorial
    return Fraction(
        comb(L + N - ell - n, L - ell) * comb(ell + n, ell) * df(L - ell - 1) * df(N - n - 1),
        df(L + N - ell - n - 1),
    )


@dataclass(frozen=True)
class PiScaled:
    """The exact number ``value * pi**pi_power * i**i_power``.

    ``i_power`` is reduced mod 4 but i**2 is *not* folded into the sign of
    ``value``, so the phase of a transform channel stays readable as
    i**ell.  Use :meth:`canonical` for phase-insensitive comparison.
    """

    value: Fraction
    pi_power: int = 0
    i_power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        object.__setattr__(self, "i_power", self.i_power % 4)

    def __mul__(self, other: PiScaled | Fraction | int) -> PiScaled:
        if isinstance(other, PiScaled):
            return PiScaled(self.value * other.value, self.pi_power + other.pi_power,
                            self.i_power + other.i_power)
        return PiScaled(self.value * other, self.pi_power, self.i_power)

    __rmul__ = __mul__

    def canonical(self) -> tuple[Fraction, int, int]:
        """(signed value, pi power, 0 or 1) with i**2 folded into the sign."""
        if self.value == 0:
            return Fraction(0), 0, 0
        return sign(self.i_power // 2) * self.value, self.pi_power, self.i_power % 2

    def __complex__(self) -> complex:
        return complex(float(self.value) * math.pi ** self.pi_power * 1j ** self.i_power)

    def __str__(self) -> str:
        return format_scaled(*self.canonical())


def format_scaled(value: Fraction, pi_power: int = 0, imag: int = 0,
                  extra_den: str | None = None) -> str:
    """Render ``value * pi**pi_power * i**imag / extra_den`` as plain text, e.g. "-3/(4 pi r^3)"."""
    neg = value < 0
    value = abs(value)
    bare_one = value.numerator == 1 and (imag or pi_power > 0)
    num = [] if bare_one else [str(value.numerator)]
    den = [] if value.denominator == 1 else [str(value.denominator)]
    if imag:
        num.insert(0, "i")
    if pi_power > 0:
        num.append("pi" if pi_power == 1 else f"pi^{pi_power}")
    elif pi_power < 0:
        den.append("pi" if pi_power == -1 else f"pi^{-pi_power}")
    if extra_den:
        den.append(extra_den)
    text = " ".join(num)
    if den:
        text += "/" + (f"({' '.join(den)})" if len(den) > 1 else den[0])
    return "-" + text if neg else text


def _gamma_half(twice_arg: int) -> tuple[Fraction, int]:
    """Gamma(twice_arg / 2) for a positive integer twice_arg, as (q, k) meaning q * sqrt(pi)**k."""
    if twice_arg <= 0:
        raise DomainError("gamma argument must be positive")
    if twice_arg % 2 == 0:
        return Fraction(factorial(twice_arg // 2 - 1)), 0
    m = (twice_arg - 1) // 2
    # Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m
    return Fraction(double_factorial(2 * m - 1), 2 ** m), 1


def chi(n: int, ell: int) -> PiScaled:
    """Radial constant chi_{n ell} = 2^(n+1) sqrt(pi) Gamma((ell+3+n)/2) / Gamma((ell-n)/2).

    Valid for integer n in the open window -(ell+3) < n < ell.  The two
    Gamma arguments differ by n + 3/2, so exactly one of them is a
    half-integer and the result is a rational, or a rational times pi.
    """
    if ell < 0:
        raise DomainError(f"ell must be non-negative, got {ell}")
    if n <= -(ell + 3):
        raise NotIntegrableError(n, ell)
    if n >= ell:
        raise DivergentError(n, ell, "n < ell; n = ell is the delta channel")
    top, top_k = _gamma_half(ell + 3 + n)
    bottom, bottom_k = _gamma_half(ell - n)
    sqrt_pi = 1 + top_k - bottom_k
    assert sqrt_pi in (0, 2)
    return PiScaled(Fraction(2) ** (n + 1) * top / bottom, sqrt_pi // 2)
