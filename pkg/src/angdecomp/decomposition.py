"""Angular-momentum components of the rank-L tensor power of a unit vector.

Three independent constructions are provided:

* :func:`component` -- the closed form, coefficient by coefficient;
* :func:`component_via_recursion` -- the Legendre three-term recursion
  in ell, seeded by the ell = 0 and ell = 1 angular averages;
* :func:`component_via_product` -- the traceless rank-ell part
  symmetrized against the isotropic rank-(L-ell) part.

All three return :class:`~angdecomp.tensor.XCombo` values and must agree
exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from angdecomp.combinatorics import (
    decomp_coefficient,
    double_factorial,
    max_component_coefficient,
)
from angdecomp.errors import DomainError
from angdecomp.tensor import XCombo, combo_contract_vector, combo_multiply_sym, combo_trace

__all__ = [
    "component",
    "max_component",
    "component_via_recursion",
    "component_via_product",
    "all_components",
    "check_traceless",
]


def _check_args(L: int, ell: int) -> bool:
    """Validate signs; return False when the component vanishes identically."""
    if L < 0 or ell < 0:
        raise DomainError(f"L and ell must be non-negative, got L={L}, ell={ell}")
    return ell <= L and (L - ell) % 2 == 0


@lru_cache(maxsize=None)
def component(L: int, ell: int) -> XCombo:
    if not _check_args(L, ell):
        return XCombo.zero(L)
    return XCombo(L, {n: decomp_coefficient(L, ell, n) for n in range(ell, -1, -2)})


@lru_cache(maxsize=None)
def max_component(L: int) -> XCombo:
    """The symmetric traceless (ell = L) component."""
    if L < 0:
        raise DomainError(f"L must be non-negative, got {L}")
    return XCombo(L, {n: max_component_coefficient(L, n) for n in range(L, -1, -2)})


@lru_cache(maxsize=None)
def component_via_recursion(L: int, ell: int) -> XCombo:
    """Build the component from lower ell by the Legendre recursion.

    The ell - 1 component of the rank-(L+1) tensor is contracted with the
    unit vector, and the rank-L ell - 2 component is subtracted.  The memo
    cache is shared between calls (``functools.lru_cache`` is thread-safe).
    """
    if not _check_args(L, ell):
        return XCombo.zero(L)
    if ell == 0:
        return XCombo(L, {0: Fraction(1, double_factorial(L + 1))})
    if ell == 1:
        return XCombo(L, {1: Fraction(3, double_factorial(L + 2))})
    scale = Fraction(2 * ell + 1, ell)
    raised = combo_contract_vector(component_via_recursion(L + 1, ell - 1))
    lowered = component_via_recursion(L, ell - 2) * Fraction(ell - 1, 2 * ell - 3)
    return (raised - lowered) * scale


@lru_cache(maxsize=None)
def component_via_product(L: int, ell: int) -> XCombo:
    if not _check_args(L, ell):
        return XCombo.zero(L)
    df = double_factorial
    prefactor = Fraction(df(2 * ell + 1) * df(L - ell + 1), df(L + ell + 1))
    return combo_multiply_sym(max_component(ell), component(L - ell, 0)) * prefactor


def all_components(L: int) -> list[tuple[int, XCombo]]:
    """Every non-vanishing component, by descending ell."""
    if L < 0:
        raise DomainError(f"L must be non-negative, got {L}")
    return [(ell, component(L, ell)) for ell in range(L, -1, -2)]


def check_traceless(c: XCombo) -> bool:
    if c.rank < 2:
        raise DomainError("tracelessness is defined for rank >= 2")
    return combo_trace(c).is_zero()
