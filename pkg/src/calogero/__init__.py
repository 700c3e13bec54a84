"""Exact non-symmetric multivariable Hermite (type A) and Laguerre (type B) polynomials.

>>> from calogero import Params, nonsym_poly
>>> str(nonsym_poly(Params("A", "3/7"), (1, 0)).poly)
'x1 + 3/10*x2'
"""

from .construct import (
    LabeledPoly,
    SymLabeledPoly,
    check_sector,
    eigenvalues,
    k_action_expand,
    nonsym_poly,
    parameter_shift_check,
    sym_coeff,
    sym_poly,
    top_coeff_partition,
    top_coeff_word,
)
from .errors import (
    BoundExceeded,
    CalogeroError,
    DegenerateEigenvalue,
    InvalidSector,
    IrrationalExponent,
    NonIntegerCoupling,
    PoleEncountered,
    SingularParameter,
)
from .exactpoly import Poly, Q, monomial
from .norms import NormRatio, base_norm_float, norm_ratio_nonsym, norm_ratio_sym
from .oracle import quadrature_gram, triangular_eigensolve, verify_suite
from .params import GENERIC_POINTS, Params, generic_params

__version__ = "0.1.0"

__all__ = [
    "BoundExceeded",
    "CalogeroError",
    "DegenerateEigenvalue",
    "GENERIC_POINTS",
    "InvalidSector",
    "IrrationalExponent",
    "LabeledPoly",
    "NonIntegerCoupling",
    "NormRatio",
    "Params",
    "PoleEncountered",
    "Poly",
    "Q",
    "SingularParameter",
    "SymLabeledPoly",
    "base_norm_float",
    "check_sector",
    "eigenvalues",
    "generic_params",
    "k_action_expand",
    "monomial",
    "nonsym_poly",
    "norm_ratio_nonsym",
    "norm_ratio_sym",
    "parameter_shift_check",
    "quadrature_gram",
    "sym_coeff",
    "sym_poly",
    "top_coeff_partition",
    "top_coeff_word",
    "triangular_eigensolve",
    "verify_suite",
]
