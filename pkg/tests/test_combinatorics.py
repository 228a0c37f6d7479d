from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from angdecomp.combinatorics import (
    PiScaled,
    chi,
    decomp_coefficient,
    double_factorial,
    format_scaled,
    kappa,
    max_component_coefficient,
)
from angdecomp.errors import DivergentError, DomainError, NotIntegrableError


def test_double_factorial_small():
    assert [double_factorial(k) for k in range(-1, 8)] == [1, 1, 1, 2, 3, 8, 15, 48, 105]
    with pytest.raises(DomainError):
        double_factorial(-3)


@given(st.integers(min_value=1, max_value=60))
def test_double_factorial_recurrence(k):
    assert double_factorial(k) == k * double_factorial(k - 2)


@given(st.integers(min_value=0, max_value=40))
def test_double_factorial_pair_is_factorial(k):
    assert double_factorial(k) * double_factorial(k - 1) == factorial(k)


def test_decomp_coefficient_examples():
    assert decomp_coefficient(2, 2, 0) == Fraction(-1, 3)
    assert decomp_coefficient(2, 0, 0) == Fraction(1, 3)
    assert decomp_coefficient(4, 2, 2) == Fraction(1, 7)
    assert decomp_coefficient(4, 2, 0) == Fraction(-2, 21)
    assert decomp_coefficient(4, 0, 0) == Fraction(1, 15)
    assert decomp_coefficient(5, 3, 1) == Fraction(-2, 45)
    assert decomp_coefficient(5, 1, 1) == Fraction(1, 35)


def test_decomp_coefficient_parity_rejected():
    with pytest.raises(DomainError):
        decomp_coefficient(4, 3, 1)
    with pytest.raises(DomainError):
        decomp_coefficient(4, 2, 1)


@given(st.integers(min_value=0, max_value=25).flatmap(
    lambda L: st.tuples(st.just(L), st.sampled_from(range(L % 2, L + 1, 2)))))
def test_max_coefficient_matches_general(pair):
    L, n = pair
    assert max_component_coefficient(L, n) == decomp_coefficient(L, L, n)
    assert max_component_coefficient(L, L) == 1


@given(st.integers(min_value=0, max_value=20).flatmap(
    lambda L: st.tuples(st.just(L), st.sampled_from(range(L % 2, L + 1, 2)))))
def test_leading_coefficient_closed_form(pair):
    # the X^{L,ell} coefficient of component ell needs no alternating sum
    L, ell = pair
    expected = Fraction(double_factorial(2 * ell + 1), double_factorial(L + ell + 1))
    assert decomp_coefficient(L, ell, ell) == expected


def test_kappa_small_cases():
    # zero-rank partner: the product is the identity
    assert kappa(3, 3, 0, 0) == 1
    # two vectors: p_i p_j symmetrised from p_i and p_j gives X^{2,2} once
    assert kappa(1, 1, 1, 1) == comb(2, 1)
    assert kappa(2, 0, 2, 0) == Fraction(comb(4, 2), 1) * Fraction(1, 3)


def test_chi_values():
    half_pi = PiScaled(Fraction(1, 2), 1)
    assert chi(-2, 0) == half_pi
    assert chi(-1, 1) == half_pi
    assert chi(0, 2) == PiScaled(Fraction(3, 2), 1)


@pytest.mark.parametrize("n,ell,exc", [(0, 0, DivergentError), (2, 2, DivergentError),
                                        (-3, 0, NotIntegrableError), (-5, 2, NotIntegrableError)])
def test_chi_domain(n, ell, exc):
    with pytest.raises(exc):
        chi(n, ell)


def test_chi_numeric_against_gamma():
    from math import gamma, pi, sqrt
    for ell in range(6):
        for n in range(-(ell + 2), ell):
            expected = 2 ** (n + 1) * sqrt(pi) * gamma((ell + 3 + n) / 2) / gamma((ell - n) / 2)
            assert complex(chi(n, ell)).real == pytest.approx(expected, rel=1e-12)


def test_pi_scaled_imaginary_unit_folds():
    z = PiScaled(Fraction(3, 4), -1, 2)
    assert z.canonical() == (Fraction(-3, 4), -1, 0)
    assert complex(PiScaled(Fraction(1), 0, 1)) == 1j
    assert format_scaled(Fraction(1, 4), -1, 0, "r") == "1/(4 pi r)"
    assert format_scaled(Fraction(-3, 4), -1, 0, "r^3") == "-3/(4 pi r^3)"
