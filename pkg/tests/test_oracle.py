from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from angdecomp.decomposition import component
from angdecomp.errors import DomainError, ValidationError
from angdecomp.oracle import (
    angular_average,
    build_quadrature,
    gauss_legendre,
    integrate,
    laplacian_identity_check,
    legendre,
    project_combo,
    project_numeric,
    random_unit_vectors,
)
from angdecomp.tensor import evaluate_combo


def test_legendre_exact_values():
    assert legendre(3, Fraction(1, 2)) == Fraction(-7, 16)
    assert legendre(2, Fraction(1, 3)) == Fraction(-1, 3)
    assert legendre(0, Fraction(5)) == 1


@pytest.mark.parametrize("m", [1, 2, 5, 12, 30])
def test_gauss_legendre_matches_numpy(m):
    nodes, weights = gauss_legendre(m)
    ref_nodes, ref_weights = np.polynomial.legendre.leggauss(m)
    assert np.allclose(np.sort(nodes), ref_nodes, atol=1e-14)
    assert np.allclose(weights[np.argsort(nodes)], ref_weights, atol=1e-14)


@pytest.mark.parametrize("degree", [0, 3, 8, 16])
def test_quadrature_integrates_monomials(degree):
    rule = build_quadrature(degree)
    assert rule.weights.sum() == pytest.approx(1.0, abs=1e-15)
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            for c in range(degree + 1 - a - b):
                numeric = integrate(np.prod(rule.nodes ** np.array([a, b, c]), axis=1), rule)
                assert numeric == pytest.approx(_sphere_mean(a, b, c), abs=1e-14)


def _sphere_mean(a, b, c):
    if a % 2 or b % 2 or c % 2:
        return 0.0
    from math import gamma
    # surface integral 2 G(a') G(b') G(c') / G(a'+b'+c') with x' = (x+1)/2, over 4 pi
    surface = 2 * gamma((a + 1) / 2) * gamma((b + 1) / 2) * gamma((c + 1) / 2) / gamma((a + b + c + 3) / 2)
    return surface / (4 * np.pi)


def test_angular_average():
    assert angular_average(3).is_zero()
    assert angular_average(4)[0] == Fraction(1, 15)
    with pytest.raises(DomainError):
        angular_average(-1)


def test_project_numeric_rank2():
    u = (0.36, -0.48, 0.8)
    t0 = project_numeric(2, 0, u)
    assert t0.at(0, 0) == pytest.approx(1 / 3, abs=1e-14)
    assert t0.at(0, 1) == pytest.approx(0.0, abs=1e-14)
    t2 = project_numeric(2, 2, u)
    assert t2.at(0, 1) == pytest.approx(0.36 * -0.48, abs=1e-14)
    assert t2.at(2, 2) == pytest.approx(0.64 - 1 / 3, abs=1e-14)
    assert project_numeric(3, 1, u).max_abs() > 0


def test_insufficient_rule_rejected():
    with pytest.raises(ValidationError):
        project_numeric(4, 2, (0.0, 0.0, 1.0), build_quadrature(3))
    with pytest.raises(ValidationError):
        project_numeric(2, 2, (0.0, 0.5, 0.5))


valid = st.integers(min_value=0, max_value=8).flatmap(
    lambda L: st.tuples(st.just(L), st.sampled_from(range(L % 2, L + 1, 2))))


@given(valid, st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=40, deadline=None)
def test_projector_matches_closed_form(pair, seed):
    L, ell = pair
    u = random_unit_vectors(1, seed)[0]
    ref = evaluate_combo(component(L, ell), u, "float")
    err = project_numeric(L, ell, u).max_abs_diff(ref)
    assert err <= 1e-10 * max(ref.max_abs(), 1.0)


@given(valid, st.integers(min_value=0, max_value=8))
@settings(max_examples=40, deadline=None)
def test_projection_kills_other_channels(pair, ell2):
    L, ell = pair
    if ell2 == ell:
        return
    u = random_unit_vectors(1, 7)[0]
    assert project_combo(component(L, ell), ell2, u).max_abs() <= 1e-10


def test_random_unit_vectors_reproducible():
    a = random_unit_vectors(50, 3)
    assert np.array_equal(a, random_unit_vectors(50, 3))
    assert np.allclose(np.linalg.norm(a, axis=1), 1.0, atol=1e-14)


@pytest.mark.parametrize("L", range(7))
def test_laplacian_identity(L):
    assert all(laplacian_identity_check(L, n) for n in range(L // 2 + 1))


def test_laplacian_identity_domain():
    with pytest.raises(DomainError):
        laplacian_identity_check(3, 2)
