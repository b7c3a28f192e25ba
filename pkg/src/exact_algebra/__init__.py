"""
Exact Algebra Module
Exact rational scalars, multivariate polynomials and dense matrix algebra
"""

from .errors import MissingVariableError, RationalParseError, SingularMatrixError
from .rational import Rational, RationalLike, format_rational, parse_rational, to_rational
from .multipoly import (
    VARIABLE_ORDER,
    MultiPoly,
    poly_arith,
    poly_coefficient,
    poly_compose,
    poly_eval,
    poly_substitute,
)
from .matrix import (
    RatMatrix,
    mat_det,
    mat_inverse,
    mat_one_inverse,
    mat_rank,
    one_inverse_factors,
    solution_space_dim,
)

__all__ = [
    'MissingVariableError',
    'RationalParseError',
    'SingularMatrixError',
    'Rational',
    'RationalLike',
    'format_rational',
    'parse_rational',
    'to_rational',
    'VARIABLE_ORDER',
    'MultiPoly',
    'poly_arith',
    'poly_coefficient',
    'poly_compose',
    'poly_eval',
    'poly_substitute',
    'RatMatrix',
    'mat_det',
    'mat_inverse',
    'mat_one_inverse',
    'mat_rank',
    'one_inverse_factors',
    'solution_space_dim',
]
