import numpy as np
import pytest

from angdecomp import kernels
from angdecomp.decomposition import component
from angdecomp.oracle import build_quadrature, project_numeric, random_unit_vectors
from angdecomp.tensor import evaluate_x, exponent_triples

compiled = pytest.mark.skipif("cython" not in kernels.BACKENDS, reason="extension not built")


def _exps(L):
    return np.array(exponent_triples(L), dtype=np.int64)


@compiled
@pytest.mark.parametrize("ell", [0, 1, 4, 9])
def test_legendre_backends_agree(ell):
    x = np.linspace(-1, 1, 101)
    py = kernels.get_backend("python").legendre_values(ell, x)
    cy = kernels.get_backend("cython").legendre_values(ell, x)
    assert np.allclose(py, cy, atol=1e-15)


@compiled
@pytest.mark.parametrize("L,ell", [(2, 0), (5, 3), (8, 8), (8, 2)])
def test_projection_backends_agree(L, ell):
    rule = build_quadrature(L + ell)
    u = random_unit_vectors(1, 11)[0]
    args = (rule.nodes, rule.weights, u, ell, _exps(L))
    py = kernels.get_backend("python").project_monomials(*args)
    cy = kernels.get_backend("cython").project_monomials(*args)
    assert np.allclose(py, cy, atol=1e-14)


@compiled
@pytest.mark.parametrize("L,n", [(0, 0), (3, 1), (6, 4), (8, 0)])
def test_x_table_backends_agree(L, n):
    pts = random_unit_vectors(20, 5)
    py = kernels.get_backend("python").x_symbol_table(L, n, pts, _exps(L))
    cy = kernels.get_backend("cython").x_symbol_table(L, n, pts, _exps(L))
    assert np.allclose(py, cy, rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("L,n", [(4, 2), (5, 1), (7, 7)])
def test_x_table_matches_exact_evaluation(L, n):
    pts = random_unit_vectors(5, 9)
    table = kernels.x_symbol_table(L, n, pts, _exps(L))
    for row, u in zip(table, pts):
        assert np.allclose(row, evaluate_x(L, n, u).to_numpy(), atol=1e-12)


def test_non_contiguous_input_accepted():
    x = np.linspace(-1, 1, 20).reshape(10, 2)[:, 0]
    assert kernels.legendre_values(2, x).shape == (10,)


def test_python_backend_end_to_end():
    previous = kernels.BACKEND
    kernels.set_backend("python")
    try:
        u = random_unit_vectors(1, 2)[0]
        from angdecomp.tensor import evaluate_combo
        ref = evaluate_combo(component(6, 4), u, "float")
        assert project_numeric(6, 4, u).max_abs_diff(ref) < 1e-12
    finally:
        kernels.set_backend(previous)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
