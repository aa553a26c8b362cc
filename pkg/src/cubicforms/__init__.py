"""Exact symbolic computation for ternary cubic forms.

The kernel (``poly``, ``calculus``) provides sparse exact polynomial
arithmetic over a fixed universe of variable families and the classical
operators: polars, transvectants, contractions, bracket determinants.  On
top of it sit the concomitants of a cubic (``concomitants``), quadratic
form utilities (``quadratics``), the reducibility hierarchy and named
criteria (``classify``), exact and numeric factorization into lines
(``factor``), cyclic-invariant forms (``symmetry``), and an executable
corpus of the identities everything else rests on (``corpus``).  ``cli``
exposes the lot as a command-line tool.
"""

from .calculus import (
    bracket,
    contract,
    contract_power,
    incidence,
    jacobian,
    multi_polar,
    polar,
    transvectant,
)
from .classify import (
    Classification,
    Criterion,
    Kind,
    apex,
    brill_report,
    brill_test,
    brioschi_normalize,
    brioschi_test,
    classify,
    cube_root,
    glenn_corollary,
    glenn_test,
    hessian_ratio,
    is_completely_reducible,
)
from .concomitants import (
    CONCOMITANT_DEGREES,
    CONCOMITANT_NAMES,
    GENERIC_TERM_COUNTS,
    ConcomitantSet,
    CubicForm,
    aronhold_set,
    as_cubic,
    concomitant_set,
    f6u,
    gamma,
    generic_concomitant,
    hessian,
    theta,
)
from .corpus import (
    CaseReport,
    CorpusSummary,
    IdentityCase,
    cases,
    get_case,
    verify,
    verify_all,
)
from .errors import CubicFormsError
from .factor import (
    BinaryCubic,
    Factorization,
    FactorMethod,
    choose_u,
    factor_binary_cubic,
    factor_cubic,
    factor_generic,
    factor_singular,
    line_points,
    restrict_to_line,
    tangent_line,
    two_cubes,
)
from .poly import Poly, Substitution, const, parse, poly_from, render, var
from .quadratics import (
    LinearForm,
    QuadraticForm,
    SquaresDecomposition,
    extract_square,
    factor_quadratic,
    quad_discriminant,
    square_of,
    sum_of_squares,
    tangent_split,
)
from .symmetry import (
    SymmetricParams,
    symmetric_decompose,
    symmetric_factor,
    symmetric_reducible,
)

__version__ = "1.0.0"

__all__ = [
    "BinaryCubic",
    "CaseReport",
    "Classification",
    "ConcomitantSet",
    "CorpusSummary",
    "Criterion",
    "CubicForm",
    "CubicFormsError",
    "CONCOMITANT_DEGREES",
    "CONCOMITANT_NAMES",
    "Factorization",
    "FactorMethod",
    "GENERIC_TERM_COUNTS",
    "IdentityCase",
    "Kind",
    "LinearForm",
    "Poly",
    "QuadraticForm",
    "SquaresDecomposition",
    "Substitution",
    "SymmetricParams",
    "apex",
    "aronhold_set",
    "as_cubic",
    "bracket",
    "brill_report",
    "brill_test",
    "brioschi_normalize",
    "brioschi_test",
    "cases",
    "choose_u",
    "classify",
    "concomitant_set",
    "const",
    "contract",
    "contract_power",
    "cube_root",
    "extract_square",
    "f6u",
    "factor_binary_cubic",
    "factor_cubic",
    "factor_generic",
    "factor_quadratic",
    "factor_singular",
    "gamma",
    "generic_concomitant",
    "get_case",
    "glenn_corollary",
    "glenn_test",
    "hessian",
    "hessian_ratio",
    "incidence",
    "is_completely_reducible",
    "jacobian",
    "line_points",
    "multi_polar",
    "parse",
    "polar",
    "poly_from",
    "quad_discriminant",
    "render",
    "restrict_to_line",
    "square_of",
    "sum_of_squares",
    "symmetric_decompose",
    "symmetric_factor",
    "symmetric_reducible",
    "tangent_line",
    "tangent_split",
    "theta",
    "transvectant",
    "two_cubes",
    "var",
    "verify",
    "verify_all",
]
