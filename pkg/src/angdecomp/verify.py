"""Verification suites behind ``angdecomp verify``.

Every check produces a :class:`Check` row with the observed error and the
bound it was held to; exact checks use bound 0.
"""

from __future__ import annotations

import time
from collections.abc import Callable, Iterator, Sequence
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any

import numpy as np

from angdecomp.combinatorics import (
    PiScaled,
    chi,
    decomp_coefficient,
    double_factorial,
    max_component_coefficient,
)
from angdecomp.decomposition import (
    all_components,
    check_traceless,
    component,
    component_via_product,
    component_via_recursion,
    max_component,
)
from angdecomp.fourier import fourier_transform, onebyr_identity_holds, radial_factor
from angdecomp.oracle import (
    DEFAULT_SEED,
    angular_average,
    build_quadrature,
    combo_at_nodes,
    full_contraction,
    integrate,
    laplacian_identity_check,
    project_combo,
    project_numeric,
    random_unit_vectors,
)
from angdecomp.tensor import (
    SymTensor,
    XCombo,
    combo_contract_vector,
    combo_multiply_sym,
    combo_trace,
    enumerate_x_terms,
    evaluate_combo,
    evaluate_x,
    exponent_triples,
    realize,
    x_term_count,
)

SUITES = ("coefficients", "identities", "oracle", "laplacian")
QUADRATURE_TOL = 1e-13
FLOAT_IDENTITY_TOL = 1e-12

RATIONAL_UNIT_VECTORS = (
    (Fraction(2, 7), Fraction(3, 7), Fraction(6, 7)),
    (Fraction(-2, 3), Fraction(1, 3), Fraction(2, 3)),
)
FLOAT_UNIT_VECTOR = (0.36, -0.48, 0.8)


@dataclass
class Check:
    name: str
    passed: bool
    error: float
    bound: float


def _exact(name: str, ok: bool) -> Check:
    return Check(name, bool(ok), 0.0 if ok else 1.0, 0.0)


def _within(name: str, error: float, bound: float) -> Check:
    return Check(name, bool(error <= bound), float(error), float(bound))


def _valid_pairs(L: int) -> Iterator[int]:
    return iter(range(L % 2, L + 1, 2))


# -- brute force on expanded terms -----------------------------------------

def evaluate_x_by_enumeration(L: int, n: int, u: Sequence[Any]) -> SymTensor:
    """X^{L,n} at u by summing every enumerated term; the slow reference."""
    exact = all(isinstance(x, (int, Fraction)) for x in u)
    zero = Fraction(0) if exact else 0.0
    terms = enumerate_x_terms(L, n)
    out = {}
    for triple in exponent_triples(L):
        idx = realize(triple)
        total = zero
        for momenta, pairs in terms:
            if any(idx[i] != idx[j] for i, j in pairs):
                continue
            value = zero + 1
            for pos in momenta:
                value *= u[idx[pos]]
            total += value
        out[triple] = total
    return SymTensor(L, out, exact)


def symmetrized_product(a: SymTensor, b: SymTensor) -> SymTensor:
    """Sum over all ways of assigning rank(a) of the indices to ``a`` and the rest to ``b``."""
    L, N = a.rank, b.rank
    exact = a.exact and b.exact
    out = {}
    for triple in exponent_triples(L + N):
        idx = realize(triple)
        total = Fraction(0) if exact else 0.0
        for chosen in combinations(range(L + N), L):
            rest = [idx[i] for i in range(L + N) if i not in chosen]
            total += a.at(*[idx[i] for i in chosen]) * b.at(*rest)
        out[triple] = total
    return SymTensor(L + N, out, exact)


def _diff(a: SymTensor, b: SymTensor) -> float:
    return a.max_abs_diff(b)


def _rel(a: SymTensor, ref: SymTensor) -> float:
    scale = ref.max_abs()
    return _diff(a, ref) / scale if scale else _diff(a, ref)


# -- suites ----------------------------------------------------------------

WORKED_EXAMPLES: tuple[tuple[int, int, dict[int, Fraction]], ...] = (
    (2, 2, {2: Fraction(1), 0: Fraction(-1, 3)}),
    (2, 0, {0: Fraction(1, 3)}),
    (3, 3, {3: Fraction(1), 1: Fraction(-1, 5)}),
    (3, 1, {1: Fraction(1, 5)}),
    (4, 4, {4: Fraction(1), 2: Fraction(-1, 7), 0: Fraction(1, 35)}),
    (4, 2, {2: Fraction(1, 7), 0: Fraction(-2, 21)}),
    (4, 0, {0: Fraction(1, 15)}),
    (5, 5, {5: Fraction(1), 3: Fraction(-1, 9), 1: Fraction(1, 63)}),
    (5, 3, {3: Fraction(1, 9), 1: Fraction(-2, 45)}),
    (5, 1, {1: Fraction(1, 35)}),
)
WORKED_TERM_COUNTS = ((4, 2, 6), (4, 0, 3), (5, 3, 10), (5, 1, 15))


def suite_coefficients(max_rank: int) -> list[Check]:
    checks = []
    for L, ell, coeffs in WORKED_EXAMPLES:
        if L <= max_rank:
            checks.append(_exact(f"worked example L={L} ell={ell}",
                                 component(L, ell) == XCombo(L, coeffs)))
    for L, n, count in WORKED_TERM_COUNTS:
        if L <= max_rank:
            checks.append(_exact(f"term count X[{L},{n}] = {count}", x_term_count(L, n) == count))
    for L in range(max_rank + 1):
        checks.append(_exact(
            f"max coefficient L={L}",
            all(max_component_coefficient(L, n) == decomp_coefficient(L, L, n)
                for n in _valid_pairs(L))))
        agree = all(component(L, ell) == component_via_recursion(L, ell) == component_via_product(L, ell)
                    for ell in _valid_pairs(L))
        checks.append(_exact(f"closed form = recursion = product L={L}", agree))
        total = XCombo.zero(L)
        for _, c in all_components(L):
            total = total + c
        checks.append(_exact(f"completeness L={L}", total == XCombo(L, {L: 1})))
        if L >= 2:
            checks.append(_exact(f"traceless max component L={L}", check_traceless(max_component(L))))
        init = (component(L, 0) == XCombo(L, {0: Fraction(1, double_factorial(L + 1))})
                if L % 2 == 0 else
                component(L, 1) == XCombo(L, {1: Fraction(3, double_factorial(L + 2))}))
        checks.append(_exact(f"initial value ell={L % 2} L={L}", init))
    checks.append(_exact("chi(-2,0)=pi/2", chi(-2, 0) == PiScaled(Fraction(1, 2), 1)))
    checks.append(_exact("chi(-1,1)=pi/2", chi(-1, 1) == PiScaled(Fraction(1, 2), 1)))
    checks.append(_exact("chi(0,2)=3pi/2", chi(0, 2) == PiScaled(Fraction(3, 2), 1)))
    checks.append(_exact(
        "delta channel coefficient (2l+1)!! for l<=10",
        all(radial_factor(ell, ell).coefficient.value == double_factorial(2 * ell + 1)
            and radial_factor(ell, ell).coefficient.pi_power == 0 for ell in range(11))))
    checks.append(_exact("transform 1/p^2 -> 1/(4 pi r)",
                         str(fourier_transform(-2, 0).channels[0].radial) == "1/(4 pi r)"))
    return checks


def suite_identities(max_rank: int) -> list[Check]:
    checks = []
    for L in range(max_rank + 1):
        ok = True
        for n in _valid_pairs(L):
            terms = enumerate_x_terms(L, n)
            canon = {(m, frozenset(frozenset(p) for p in pairs)) for m, pairs in terms}
            ok &= len(terms) == x_term_count(L, n) == len(canon)
        checks.append(_exact(f"enumeration count/distinct L={L}", ok))
    enum_cap = min(max_rank, 8)
    for L in range(enum_cap + 1):
        u = RATIONAL_UNIT_VECTORS[0]
        ok = all(evaluate_x(L, n, u) == evaluate_x_by_enumeration(L, n, u) for n in _valid_pairs(L))
        checks.append(_exact(f"evaluate_x = enumeration L={L}", ok))
    for L in range(1, enum_cap + 1):
        for u in RATIONAL_UNIT_VECTORS:
            ok = all(
                evaluate_x(L, n, u).contract_vector(u)
                == evaluate_combo(combo_contract_vector(XCombo(L, {n: 1})), u)
                for n in _valid_pairs(L))
            checks.append(_exact(f"X.u identity L={L} u={_vec(u)}", ok))
        err = max(_diff(evaluate_x(L, n, FLOAT_UNIT_VECTOR).contract_vector(FLOAT_UNIT_VECTOR),
                        evaluate_combo(combo_contract_vector(XCombo(L, {n: 1})), FLOAT_UNIT_VECTOR))
                  for n in _valid_pairs(L))
        checks.append(_within(f"X.u identity L={L} float", err, FLOAT_IDENTITY_TOL))
    for L in range(2, enum_cap + 1):
        for u in RATIONAL_UNIT_VECTORS:
            ok = all(evaluate_x(L, n, u).trace() == evaluate_combo(combo_trace(XCombo(L, {n: 1})), u)
                     for n in _valid_pairs(L))
            checks.append(_exact(f"X.delta identity L={L} u={_vec(u)}", ok))
    u = RATIONAL_UNIT_VECTORS[0]
    cache: dict[tuple[int, int], SymTensor] = {}

    def x_at(L: int, n: int) -> SymTensor:
        if (L, n) not in cache:
            cache[(L, n)] = evaluate_x(L, n, u)
        return cache[(L, n)]

    for total in range(min(max_rank, 10) + 1):
        ok = True
        for L in range(total + 1):
            N = total - L
            for ell in _valid_pairs(L):
                for n in _valid_pairs(N):
                    lhs = symmetrized_product(x_at(L, ell), x_at(N, n))
                    rhs = evaluate_combo(combo_multiply_sym(XCombo(L, {ell: 1}), XCombo(N, {n: 1})), u)
                    ok &= lhs == rhs
        checks.append(_exact(f"symmetrized product identity L+N={total}", ok))
    for k in range(1, min(max_rank, 4) + 1):
        checks.append(_exact(f"traceless derivative of 1/r, k={k}", onebyr_identity_holds(k)))
    return checks


def _vec(u: Sequence[Any]) -> str:
    return "(" + ",".join(str(x) for x in u) + ")"


def suite_oracle(max_rank: int, seed: int = DEFAULT_SEED, tol: float = 1e-10,
                 n_vectors: int = 100) -> list[Check]:
    checks = []
    vectors = random_unit_vectors(n_vectors, seed)
    degree = 2 * max(max_rank, 1)
    rule = build_quadrature(degree)
    worst = 0.0
    for N in range(degree + 1):
        exact = evaluate_combo(angular_average(N), (Fraction(0), Fraction(0), Fraction(1)))
        exps = np.array(exponent_triples(N))
        mono = np.prod(rule.nodes[:, None, :] ** exps[None, :, :], axis=2)
        numeric = integrate(mono, rule)
        worst = max(worst, float(np.max(np.abs(numeric - np.array([float(v) for v in exact.values()])))))
    checks.append(_within(f"quadrature exactness to degree {degree}", worst, QUADRATURE_TOL))

    for L in range(max_rank + 1):
        ells = list(_valid_pairs(L))
        err = 0.0
        for ell in ells:
            comp = component(L, ell)
            for u in vectors:
                err = max(err, _rel(project_numeric(L, ell, u), evaluate_combo(comp, u, "float")))
        checks.append(_within(f"projector vs closed form L={L} ({n_vectors} vectors, seed {seed})",
                              err, tol))
        idem, cross = 0.0, 0.0
        for ell in ells:
            comp = component(L, ell)
            for ell2 in ells:
                for u in vectors:
                    projected = project_combo(comp, ell2, u)
                    if ell2 == ell:
                        idem = max(idem, _rel(projected, evaluate_combo(comp, u, "float")))
                    else:
                        cross = max(cross, projected.max_abs())
        checks.append(_within(f"projection idempotence L={L}", idem, tol))
        if len(ells) > 1:
            checks.append(_within(f"cross-ell projection L={L}", cross, tol))
            orule = build_quadrature(2 * L)
            tables = {ell: combo_at_nodes(component(L, ell), orule.nodes) for ell in ells}
            orth = max(abs(float(integrate(full_contraction(tables[a], tables[b], L), orule)))
                       for a in ells for b in ells if a != b)
            checks.append(_within(f"orthogonality L={L}", orth, tol))
    return checks


def suite_laplacian(max_rank: int) -> list[Check]:
    return [_exact(f"laplacian identity L={L} n={n}", laplacian_identity_check(L, n))
            for L in range(max_rank + 1) for n in range(L // 2 + 1)]


def run(suite: str, max_rank: int, seed: int = DEFAULT_SEED, tol: float = 1e-10) -> dict:
    """Run one suite (or ``"all"``) and return a JSON-ready report."""
    if max_rank < 0:
        raise ValueError("max_rank must be non-negative")
    runners: dict[str, Callable[[], list[Check]]] = {
        "coefficients": lambda: suite_coefficients(max_rank),
        "identities": lambda: suite_identities(max_rank),
        "oracle": lambda: suite_oracle(max_rank, seed, tol),
        "laplacian": lambda: suite_laplacian(max_rank),
    }
    names = SUITES if suite == "all" else (suite,)
    if any(n not in runners for n in names):
        raise ValueError(f"unknown suite {suite!r}")
    report: dict = {"suite": suite, "max_rank": max_rank, "seed": seed, "tol": tol, "suites": []}
    for name in names:
        start = time.perf_counter()
        checks = runners[name]()
        report["suites"].append({
            "name": name,
            "seconds": round(time.perf_counter() - start, 3),
            "passed": all(c.passed for c in checks),
            "checks": [asdict(c) for c in checks],
        })
    report["passed"] = all(s["passed"] for s in report["suites"])
    return report
