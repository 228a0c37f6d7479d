"""Exact angular-momentum decomposition of tensor powers of a unit vector.

The rank-L product of a unit vector splits into components of angular
momentum ell = L, L-2, ...; each is an exact rational combination of the
symmetric X^{L,n} structures (n unit vectors, (L-n)/2 Kronecker deltas).
The package also assembles 3D Fourier transforms of p^n times such
products channel by channel, and ships independent numerical and
symbolic oracles for everything it claims.
"""

from angdecomp.combinatorics import (
    PiScaled,
    Rational,
    chi,
    decomp_coefficient,
    double_factorial,
    kappa,
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
from angdecomp.errors import (
    DivergentError,
    DomainError,
    NotIntegrableError,
    TransformDomainError,
    ValidationError,
)
from angdecomp.fourier import (
    FourierResult,
    RadialTerm,
    derivative_identity_delta,
    derivative_identity_onebyr,
    fourier_transform,
    radial_factor,
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
    x_term_count,
)

__version__ = "0.1.0"
