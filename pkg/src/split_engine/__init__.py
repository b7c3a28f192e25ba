"""
Split Engine Module
Lattice matrices, evaluation regions, splitting coefficients and the
evaluation of Tutte polynomials of glued graphs by splitting
"""

from .errors import OnSingularHyperbolaError, RegionPreconditionError, SingularInverseError
from .matrices import build_An, build_Ln, build_Tn, det_Tn_closed_form
from .regions import Region, RegionKind, classify_region, hyperbola_parameter
from .coefficients import (
    CoeffMatrix,
    Connectivity,
    Solver,
    clear_coefficient_cache,
    coeffs_at_point,
    y_one_coefficients_symbolic,
)
from .splitting import (
    SplitResult,
    brylawski_eval,
    contraction_values,
    hyperbola_one_term_splittings,
    split_eval,
    split_evaluate,
)
from .degeneracy import (
    alternative_one_inverse,
    ln_invertibility,
    solution_dim_formula,
    two_solutions_demo,
)
from . import reference_fixtures

__all__ = [
    'OnSingularHyperbolaError',
    'RegionPreconditionError',
    'SingularInverseError',
    'build_An',
    'build_Ln',
    'build_Tn',
    'det_Tn_closed_form',
    'Region',
    'RegionKind',
    'classify_region',
    'hyperbola_parameter',
    'CoeffMatrix',
    'Connectivity',
    'Solver',
    'clear_coefficient_cache',
    'coeffs_at_point',
    'y_one_coefficients_symbolic',
    'SplitResult',
    'brylawski_eval',
    'contraction_values',
    'hyperbola_one_term_splittings',
    'split_eval',
    'split_evaluate',
    'alternative_one_inverse',
    'ln_invertibility',
    'solution_dim_formula',
    'two_solutions_demo',
    'reference_fixtures',
]
