"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument falls outside the mathematical domain of an operation."""


class ValidationError(ValueError):
    """Input data fails a numerical precondition (normalization, quadrature degree)."""


class TransformDomainError(DomainError):
    """The radial integral for p^n on channel ell is undefined."""

    name = "transform domain error"

    def __init__(self, n: int, ell: int, detail: str = "") -> None:
        self.n = n
        self.ell = ell
        super().__init__(f"{self.name}: n={n}, ell={ell}{detail}")


class DivergentError(TransformDomainError):
    """n >= ell + 1: the radial integral diverges at large p."""

    name = "divergent"

    def __init__(self, n: int, ell: int, need: str = "n <= ell") -> None:
        super().__init__(n, ell, f" (need {need}, ell = {ell})")


class NotIntegrableError(TransformDomainError):
    """n <= -(ell + 3): the radial integral diverges at small p."""

    name = "not integrable"

    def __init__(self, n: int, ell: int) -> None:
        super().__init__(n, ell, f" (need n > -(ell+3) = {-(ell + 3)})")
