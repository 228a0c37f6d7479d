"""Exact polynomials in (x, y, z), and sums of polynomials times powers of 1/r."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

MultiIndex = tuple[int, int, int]


def _bump(e: MultiIndex, axis: int, by: int) -> MultiIndex:
    out = list(e)
    out[axis] += by
    return (out[0], out[1], out[2])


@dataclass(frozen=True)
class Poly3:
    """Polynomial with Fraction coefficients keyed by exponent triple."""

    terms: Mapping[MultiIndex, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms",
                           {tuple(e): Fraction(c) for e, c in self.terms.items() if c != 0})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff: Fraction | int = 1) -> Poly3:
        e = tuple(exponents)
        return cls({e: Fraction(coeff)})

    @classmethod
    def constant(cls, value: Fraction | int) -> Poly3:
        return cls({(0, 0, 0): Fraction(value)})

    @classmethod
    def zero(cls) -> Poly3:
        return cls({})

    @classmethod
    def r_squared(cls) -> Poly3:
        return cls({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def __add__(self, other: Poly3) -> Poly3:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly3(out)

    def __sub__(self, other: Poly3) -> Poly3:
        return self + other.scale(-1)

    def scale(self, factor: Fraction | int) -> Poly3:
        return Poly3({e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other: Poly3) -> Poly3:
        out: dict[MultiIndex, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return Poly3(out)

    def __pow__(self, k: int) -> Poly3:
        result = Poly3.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def times_coordinate(self, axis: int) -> Poly3:
        return Poly3({_bump(e, axis, 1): c for e, c in self.terms.items()})

    def diff(self, axis: int) -> Poly3:
        out = {}
        for e, c in self.terms.items():
            if e[axis]:
                out[_bump(e, axis, -1)] = c * e[axis]
        return Poly3(out)

    def laplacian(self) -> Poly3:
        return self.diff(0).diff(0) + self.diff(1).diff(1) + self.diff(2).diff(2)

    def __call__(self, x: float, y: float, z: float) -> float:
        return sum(float(c) * x ** a * y ** b * z ** d for (a, b, d), c in self.terms.items())


@dataclass(frozen=True)
class RadialPoly:
    """A function ``sum_m P_m(x, y, z) / r**m`` away from the origin."""

    terms: Mapping[int, Poly3]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", {m: p for m, p in self.terms.items() if not p.is_zero()})

    @classmethod
    def inverse_r_power(cls, m: int, coeff: Fraction | int = 1) -> RadialPoly:
        return cls({m: Poly3.constant(coeff)})

    def __add__(self, other: RadialPoly) -> RadialPoly:
        out = dict(self.terms)
        for m, p in other.terms.items():
            out[m] = out[m] + p if m in out else p
        return RadialPoly(out)

    def scale(self, factor: Fraction | int) -> RadialPoly:
        return RadialPoly({m: p.scale(factor) for m, p in self.terms.items()})

    def times_poly(self, poly: Poly3) -> RadialPoly:
        return RadialPoly({m: p * poly for m, p in self.terms.items()})

    def diff(self, axis: int) -> RadialPoly:
        # d/dx_i (P r^-m) = (dP/dx_i) r^-m - m x_i P r^-(m+2)
        out = RadialPoly({})
        for m, p in self.terms.items():
            out = out + RadialPoly({m: p.diff(axis)})
            out = out + RadialPoly({m + 2: p.times_coordinate(axis).scale(-m)})
        return out

    def laplacian(self) -> RadialPoly:
        return self.diff(0).diff(0) + self.diff(1).diff(1) + self.diff(2).diff(2)

    def canonical(self, common_power: int) -> Poly3:
        """Multiply by r**common_power and expand even powers of r as polynomials.

        Two functions agree away from the origin iff their canonical
        polynomials agree for the same ``common_power``.
        """
        out = Poly3.zero()
        r2 = Poly3.r_squared()
        for m, p in self.terms.items():
            lift = common_power - m
            if lift < 0 or lift % 2:
                raise ValueError(f"cannot lift r^-{m} by r^{common_power} to a polynomial")
            out = out + p * r2 ** (lift // 2)
        return out

    def equals(self, other: RadialPoly) -> bool:
        """Exact equality as functions away from the origin.

        Odd and even powers of r are independent over the polynomials, so
        each parity class is compared on its own.
        """
        powers = set(self.terms) | set(other.terms)
        for parity in {m % 2 for m in powers}:
            top = max(m for m in powers if m % 2 == parity)
            mine = RadialPoly({m: p for m, p in self.terms.items() if m % 2 == parity})
            theirs = RadialPoly({m: p for m, p in other.terms.items() if m % 2 == parity})
            if mine.canonical(top) != theirs.canonical(top):
                return False
        return True

    def __call__(self, x: float, y: float, z: float) -> float:
        r = (x * x + y * y + z * z) ** 0.5
        return sum(p(x, y, z) / r ** m for m, p in self.terms.items())

