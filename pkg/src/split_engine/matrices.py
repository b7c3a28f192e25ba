"""
Lattice Matrices
Matrices indexed by the canonical order of terminal partitions: the meet
matrix T_n(t), the connectivity matrix A_n and the y = 1 matrix L_n(x)
"""

import logging
from fractions import Fraction
from typing import Optional

from exact_algebra import MultiPoly, RatMatrix, RationalLike, to_rational
from partition_lattice import MAX_TERMINALS, lattice_for_size, meet_size_table

logger = logging.getLogger(__name__)

_T = MultiPoly.variable('t')
_X = MultiPoly.variable('x')


def build_Tn(n: int, t: Optional[RationalLike] = None, max_n: int = MAX_TERMINALS) -> RatMatrix:
    """
    Meet matrix with (A, B) entry t^|A∧B|

    Args:
        n: Number of terminals
        t: Rational value, or None for the symbolic matrix in t
        max_n: Largest accepted n

    Raises:
        GroundTooLargeError: If n > max_n
    """
    sizes = meet_size_table(n, max_n=max_n)
    m = len(sizes)
    if t is None:
        return RatMatrix.from_function(m, lambda i, j: _T ** sizes[i][j])
    t = to_rational(t)
    return RatMatrix.from_function(m, lambda i, j: t ** sizes[i][j])


def det_Tn_closed_form(n: int, t: RationalLike, max_n: int = MAX_TERMINALS) -> Fraction:
    """Product over partitions A of (t)(t-1)...(t-|A|+1)"""
    t = to_rational(t)
    result = Fraction(1)
    for A in lattice_for_size(n, max_n=max_n):
        for q in range(A.num_blocks):
            result *= t - q
    return result


def build_An(n: int, max_n: int = MAX_TERMINALS) -> RatMatrix:
    """Connectivity matrix: 1 where A∧B has a single block, else 0"""
    sizes = meet_size_table(n, max_n=max_n)
    return RatMatrix.from_function(len(sizes), lambda i, j: int(sizes[i][j] == 1))


def build_Ln(n: int, x: Optional[RationalLike] = None, max_n: int = MAX_TERMINALS) -> RatMatrix:
    """
    Matrix of the y = 1 splitting

    The (A, B) entry is (x-1)^(|A∧B|-1) when |A∧B| + n = |A| + |B| and 0
    otherwise.

    Args:
        n: Number of terminals
        x: Rational value, or None for the symbolic matrix in x
        max_n: Largest accepted n

    Raises:
        GroundTooLargeError: If n > max_n
    """
    lattice = lattice_for_size(n, max_n=max_n)
    sizes = meet_size_table(n, max_n=max_n)
    base = _X - 1 if x is None else to_rational(x) - 1

    def entry(i: int, j: int):
        common = sizes[i][j]
        if common + n != lattice[i].num_blocks + lattice[j].num_blocks:
            return 0
        return base ** (common - 1)

    return RatMatrix.from_function(len(lattice), entry)
