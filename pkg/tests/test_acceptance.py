"""The eight acceptance criteria, each with its tolerance and runtime limit.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from angdecomp import combinatorics, decomposition, oracle
from angdecomp.cli import cmd_decompose
from angdecomp.combinatorics import PiScaled, chi, double_factorial
from angdecomp.decomposition import (
    all_components,
    component,
    component_via_product,
    component_via_recursion,
    max_component,
)
from angdecomp.fourier import fourier_transform, radial_factor
from angdecomp.oracle import laplacian_identity_check, project_combo, project_numeric, random_unit_vectors
from angdecomp.tensor import (
    XCombo,
    combo_contract_vector,
    combo_multiply_sym,
    combo_trace,
    evaluate_combo,
    evaluate_x,
)
from angdecomp.verify import RATIONAL_UNIT_VECTORS, evaluate_x_by_enumeration, symmetrized_product

F = Fraction


@pytest.fixture(autouse=True)
def cold_caches():
    # runtime limits are measured without memoized results from earlier tests
    for fn in (combinatorics.double_factorial, decomposition.component, decomposition.max_component,
               decomposition.component_via_recursion, decomposition.component_via_product,
               oracle.build_quadrature, oracle._exps, oracle._default_table):
        fn.cache_clear()


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, limit {seconds} s"


def _valid(L):
    return range(L % 2, L + 1, 2)


def _decomposition(rank):
    payload = json.loads(cmd_decompose(rank, fmt="json", with_counts=True))
    return {c["ell"]: ({int(n): F(q) for n, q in c["x_coefficients"].items()},
                       {int(n): m for n, m in c["term_counts"].items()})
            for c in payload["components"]}


def test_criterion_1_worked_examples():
    with within(1.0):
        d2, d3, d4, d5 = (_decomposition(L) for L in (2, 3, 4, 5))
        assert d2[0][0] == {0: F(1, 3)}
        assert d2[2][0] == {2: 1, 0: F(-1, 3)}
        assert d3[3][0] == {3: 1, 1: F(-1, 5)}
        assert d3[1][0] == {1: F(1, 5)}
        assert d4[4][0] == {4: 1, 2: F(-1, 7), 0: F(1, 35)}
        # ell=2 is (1/7)((p p)_2 delta + perms); (p p)_2 = X[2,2] - X[2,0]/3 folds to -2/21
        assert d4[2][0] == {2: F(1, 7), 0: F(1, 7) * F(-1, 3) * 2}
        assert d4[0][0] == {0: F(1, 15)}
        assert d5[5][0] == {5: 1, 3: F(-1, 9), 1: F(1, 63)}
        assert d5[3][0][3] == F(1, 9)
        assert d5[1][0] == {1: F(1, 35)}
        assert d4[4][1] == {4: 1, 2: 6, 0: 3}
        assert d5[5][1] == {5: 1, 3: 10, 1: 15}


def test_criterion_2_transforms():
    with within(1.0):
        (ch0,) = fourier_transform(-2, 0).channels
        assert ch0.radial.kind == "power" and ch0.radial.r_power == 1
        assert ch0.radial.coefficient.canonical() == (F(1, 4), -1, 0)
        assert str(ch0.radial) == "1/(4 pi r)"

        (ch1,) = fourier_transform(-1, 1).channels
        assert ch1.radial.r_power == 2 and ch1.angular == XCombo(1, {1: 1})
        assert ch1.radial.coefficient.canonical() == (F(1, 4), -1, 1)
        assert str(ch1.radial) == "i/(4 pi r^2)"

        by_ell = {ch.ell: ch for ch in fourier_transform(0, 2).channels}
        assert set(by_ell) == {0, 2}
        assert by_ell[2].radial.kind == "power" and by_ell[2].radial.r_power == 3
        assert by_ell[2].radial.coefficient.canonical() == (F(-3, 4), -1, 0)
        assert by_ell[2].angular == XCombo(2, {2: 1, 0: F(-1, 3)})
        assert by_ell[0].radial.kind == "delta" and by_ell[0].radial.r_power == 0
        assert by_ell[0].radial.coefficient.canonical() == (F(1), 0, 0)
        assert by_ell[0].angular == XCombo(2, {0: F(1, 3)})


def test_criterion_3_triple_construction():
    with within(10.0):
        for L in range(13):
            for ell in _valid(L):
                closed = component(L, ell)
                assert closed == component_via_recursion(L, ell), (L, ell)
                assert closed == component_via_product(L, ell), (L, ell)


def test_criterion_4_completeness_and_tracelessness():
    with within(5.0):
        for L in range(13):
            total = XCombo.zero(L)
            for _, c in all_components(L):
                total = total + c
            assert total == XCombo(L, {L: 1}), L
            if L >= 2:
                assert combo_trace(max_component(L)).is_zero(), L


def test_criterion_5_identities():
    with within(60.0):
        for u in RATIONAL_UNIT_VECTORS:
            for L in range(9):
                for n in _valid(L):
                    x = evaluate_x_by_enumeration(L, n, u)
                    assert x == evaluate_x(L, n, u), (L, n)
                    unit = XCombo(L, {n: 1})
                    if L >= 1:
                        assert x.contract_vector(u) == evaluate_combo(combo_contract_vector(unit), u), (L, n)
                    if L >= 2:
                        assert x.trace() == evaluate_combo(combo_trace(unit), u), (L, n)
        u = RATIONAL_UNIT_VECTORS[0]
        cache = {}
        for total in range(11):
            for L in range(total + 1):
                N = total - L
                for ell in _valid(L):
                    for n in _valid(N):
                        for key in ((L, ell), (N, n)):
                            if key not in cache:
                                cache[key] = evaluate_x(*key, u)
                        lhs = symmetrized_product(cache[(L, ell)], cache[(N, n)])
                        rhs = combo_multiply_sym(XCombo(L, {ell: 1}), XCombo(N, {n: 1}))
                        assert lhs == evaluate_combo(rhs, u), (L, ell, N, n)


def test_criterion_6_oracle():
    with within(120.0):
        vectors = random_unit_vectors(100)
        worst_rel, worst_cross = 0.0, 0.0
        for L in range(9):
            for ell in _valid(L):
                comp = component(L, ell)
                for u in vectors:
                    ref = evaluate_combo(comp, u, "float")
                    worst_rel = max(worst_rel, project_numeric(L, ell, u).max_abs_diff(ref) / ref.max_abs())
                    for ell2 in _valid(L):
                        if ell2 != ell:
                            worst_cross = max(worst_cross, project_combo(comp, ell2, u).max_abs())
        print(f"oracle: max relative error {worst_rel:.2e}, max cross-ell {worst_cross:.2e}")
        assert worst_rel <= 1e-10
        assert worst_cross <= 1e-10


def test_criterion_7_laplacian_identity():
    with within(30.0):
        for L in range(9):
            for n in range(L // 2 + 1):
                assert laplacian_identity_check(L, n), (L, n)


def test_criterion_8_radial_factors():
    half_pi = PiScaled(F(1, 2), 1)
    assert chi(-2, 0) == half_pi
    assert chi(-1, 1) == half_pi
    assert chi(0, 2) == PiScaled(F(3, 2), 1)
    for ell in range(11):
        term = radial_factor(ell, ell)
        value, pi_power, _ = term.coefficient.canonical()
        assert term.kind == "delta"
        assert pi_power == 0
        assert abs(value) == double_factorial(2 * ell + 1)
        assert term.coefficient.i_power == ell % 4
