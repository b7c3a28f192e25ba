"""
Degeneracy
Solution-space dimensions and non-uniqueness of the splitting equations
"""

import logging
from fractions import Fraction
from typing import Tuple

from exact_algebra import (
    RatMatrix,
    RationalLike,
    mat_one_inverse,
    mat_rank,
    one_inverse_factors,
    to_rational,
)
from partition_lattice import MAX_TERMINALS, bell, stirling2

from .matrices import build_Ln

logger = logging.getLogger(__name__)


def solution_dim_formula(n: int, t: RationalLike) -> int:
    """
    Dimension of the solutions of T_n(t) B T_n(t) = T_n(t)

    Bell(n)^2 - (S(n,0) + ... + S(n,t))^2 for t in {0, ..., n-1}; 0
    everywhere else, where T_n(t) is invertible.
    """
    t = to_rational(t)
    if t.denominator != 1 or not 0 <= t <= n - 1:
        return 0
    rank = sum(stirling2(n, i) for i in range(int(t) + 1))
    return bell(n) ** 2 - rank ** 2


def ln_invertibility(n: int, x: RationalLike, max_n: int = MAX_TERMINALS) -> bool:
    """True iff L_n(x) has full rank"""
    L = build_Ln(n, x, max_n=max_n)
    return mat_rank(L) == L.dim


def alternative_one_inverse(M: RatMatrix, shift: RationalLike = 1) -> RatMatrix:
    """
    A second {1}-inverse of a singular M

    With P·M·Q = diag(I_r, 0), every Q [[I_r, X], [Y, W]] P solves
    M·B·M = M. This returns the solution with X = Y = 0 and W = shift·E_11,
    which differs from mat_one_inverse(M) by shift·Q E_rr P.

    Raises:
        ValueError: If M is invertible
    """
    P, Q, r = one_inverse_factors(M)
    m = M.dim
    if r == m:
        raise ValueError("An invertible matrix has a unique {1}-inverse")
    shift = to_rational(shift)
    return RatMatrix.from_function(
        m,
        lambda i, j: sum((Q[i, k] * P[k, j] for k in range(r)), Fraction(0)) + shift * Q[i, r] * P[r, j]
    )


def two_solutions_demo(n: int = 4, x: RationalLike = 1) -> Tuple[RatMatrix, RatMatrix]:
    """
    Two distinct solutions D, D' of L_n(x) D L_n(x) = L_n(x)

    Raises:
        ValueError: If L_n(x) is invertible (n <= 3)
    """
    L = build_Ln(n, x)
    first = mat_one_inverse(L)
    second = alternative_one_inverse(L)
    logger.info(f"L_{n}({x}): rank {mat_rank(L)} of {L.dim}, two distinct {{1}}-inverses built")
    return first, second
