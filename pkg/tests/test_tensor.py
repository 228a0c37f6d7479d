from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from angdecomp.errors import DomainError, ValidationError
from angdecomp.tensor import (
    SymTensor,
    XCombo,
    combo_contract_vector,
    combo_trace,
    enumerate_x_terms,
    evaluate_combo,
    evaluate_x,
    exponent_triples,
    x_term_count,
)
from angdecomp.verify import evaluate_x_by_enumeration

pairs_upto = lambda top: st.integers(min_value=0, max_value=top).flatmap(
    lambda L: st.tuples(st.just(L), st.sampled_from(range(L % 2, L + 1, 2))))


@pytest.mark.parametrize("L,n,count", [(2, 0, 1), (4, 2, 6), (4, 0, 3), (5, 3, 10), (5, 1, 15),
                                        (6, 0, 15), (3, 1, 3)])
def test_term_counts(L, n, count):
    assert x_term_count(L, n) == count
    assert len(enumerate_x_terms(L, n)) == count


@given(pairs_upto(9))
def test_enumeration_terms_distinct_and_complete(pair):
    L, n = pair
    terms = enumerate_x_terms(L, n)
    seen = set()
    for momenta, pairs in terms:
        used = sorted(list(momenta) + [i for p in pairs for i in p])
        assert used == list(range(L))
        seen.add((tuple(momenta), frozenset(frozenset(p) for p in pairs)))
    assert len(seen) == len(terms) == x_term_count(L, n)


def test_rank2_values(rational_unit):
    x, y, z = rational_unit
    t = evaluate_x(2, 2, rational_unit)
    assert t.at(0, 1) == x * y and t.at(2, 2) == z * z
    d = evaluate_x(2, 0, rational_unit)
    assert d.at(0, 0) == 1 and d.at(0, 2) == 0


@given(pairs_upto(7))
@settings(max_examples=30, deadline=None)
def test_closed_form_matches_enumeration(pair):
    L, n = pair
    u = (Fraction(-2, 3), Fraction(1, 3), Fraction(2, 3))
    assert evaluate_x(L, n, u) == evaluate_x_by_enumeration(L, n, u)


def test_unit_vector_required():
    with pytest.raises(ValidationError):
        evaluate_x(2, 2, (Fraction(1), Fraction(1), Fraction(0)))
    with pytest.raises(ValidationError):
        evaluate_x(2, 2, (1.0, 1e-5, 0.0))
    evaluate_x(2, 2, (1.0, 1e-14, 0.0))


def test_parity_rejected():
    with pytest.raises(DomainError):
        XCombo(4, {3: 1})
    with pytest.raises(DomainError):
        x_term_count(4, 1)


def test_full_tensor_is_symmetric():
    u = np.array([0.36, -0.48, 0.8])
    full = evaluate_x(4, 2, u).to_full()
    assert full.shape == (3, 3, 3, 3)
    assert np.allclose(full, full.transpose(1, 0, 2, 3))
    assert np.allclose(full, full.transpose(3, 2, 1, 0))
    assert np.allclose(full, full.transpose(2, 3, 0, 1))


@given(pairs_upto(8).filter(lambda p: p[0] >= 1))
@settings(max_examples=25, deadline=None)
def test_contraction_identity(pair):
    L, n = pair
    u = (Fraction(2, 7), Fraction(3, 7), Fraction(6, 7))
    lhs = evaluate_x(L, n, u).contract_vector(u)
    rhs = evaluate_combo(combo_contract_vector(XCombo(L, {n: 1})), u)
    assert lhs == rhs


@given(pairs_upto(8).filter(lambda p: p[0] >= 2))
@settings(max_examples=25, deadline=None)
def test_trace_identity(pair):
    L, n = pair
    u = (Fraction(2, 7), Fraction(3, 7), Fraction(6, 7))
    assert evaluate_x(L, n, u).trace() == evaluate_combo(combo_trace(XCombo(L, {n: 1})), u)


def test_contraction_identity_coefficients():
    assert combo_contract_vector(XCombo(4, {2: 1})) == XCombo(3, {3: 3, 1: 1})
    assert combo_trace(XCombo(4, {2: 1})) == XCombo(2, {2: 7, 0: 1})


def test_xcombo_algebra_and_repr():
    a = XCombo(4, {2: Fraction(1, 7), 0: Fraction(-2, 21)})
    assert repr(a) == "XCombo(rank=4, {2: 1/7, 0: -2/21})"
    assert (a - a).is_zero()
    assert a + a == a * 2 == -(-a) * 2
    assert hash(a) == hash(XCombo(4, {0: Fraction(-2, 21), 2: Fraction(1, 7)}))
    assert a[4] == 0


def test_symtensor_component_count():
    assert len(exponent_triples(3)) == 10
    with pytest.raises(ValueError):
        SymTensor(2, {(2, 0, 0): 1})
