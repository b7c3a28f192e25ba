"""
Reference Matrices
Published splitting matrices for n = 2, 3, 4, stored in their printed
partition order. Compare computed matrices after conjugating them with
reference_order_permutation().
"""

from fractions import Fraction
from typing import List

from exact_algebra import MultiPoly, RatMatrix

_X = MultiPoly.variable('x')

# n = 4 matrices, rows and columns in REFERENCE_ORDER_4

A_4_ROWS: List[List[int]] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0],
    [1, 1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 0],
    [1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0],
    [1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0],
    [1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0],
    [1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

# B'_4 = A_4^-1, printed as 6 * B'_4
B_PRIME_4_ROWS_TIMES_6: List[List[int]] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6],
    [0, -1, -1, -1, -1, 1, 1, 1, -1, -1, 2, 2, -1, 2, -2],
    [0, -1, -1, -1, -1, 1, 1, 1, -1, 2, -1, -1, 2, 2, -2],
    [0, -1, -1, -1, -1, 1, 1, 1, 2, -1, -1, 2, 2, -1, -2],
    [0, -1, -1, -1, -1, 1, 1, 1, 2, 2, 2, -1, -1, -1, -2],
    [0, 1, 1, 1, 1, -1, -1, -1, -2, 1, 1, 1, 1, -2, -1],
    [0, 1, 1, 1, 1, -1, -1, -1, 1, 1, -2, 1, -2, 1, -1],
    [0, 1, 1, 1, 1, -1, -1, -1, 1, -2, 1, -2, 1, 1, -1],
    [0, -1, -1, 2, 2, -2, 1, 1, 2, -1, -1, -1, -1, -1, 1],
    [0, -1, 2, -1, 2, 1, 1, -2, -1, 2, -1, -1, -1, -1, 1],
    [0, 2, -1, -1, 2, 1, -2, 1, -1, -1, 2, -1, -1, -1, 1],
    [0, 2, -1, 2, -1, 1, 1, -2, -1, -1, -1, 2, -1, -1, 1],
    [0, -1, 2, 2, -1, 1, -2, 1, -1, -1, -1, -1, 2, -1, 1],
    [0, 2, 2, -1, -1, -2, 1, 1, -1, -1, -1, -1, -1, 2, 1],
    [6, -2, -2, -2, -2, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1],
]

L_4_AT_1_ROWS: List[List[int]] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

# A solution of L_4(1) D L_4(1) = L_4(1), printed as 14 * D_4
D_4_ROWS_TIMES_14: List[List[int]] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 14],
    [0, 0, 0, 0, 0, 0, 0, 0, -3, -3, 4, 4, -3, 4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -3, 4, -3, -3, 4, 4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, -3, -3, 4, 4, -3, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, 4, 4, -3, -3, -3, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -4, 3, 3, 3, 3, -4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 3, 3, -4, 3, -4, 3, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 3, -4, 3, -4, 3, 3, 0],
    [0, -3, -3, 4, 4, -4, 3, 3, 0, 0, 0, 0, 0, 0, 0],
    [0, -3, 4, -3, 4, 3, 3, -4, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, -3, -3, 4, 3, -4, 3, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, -3, 4, -3, 3, 3, -4, 0, 0, 0, 0, 0, 0, 0],
    [0, -3, 4, 4, -3, 3, -4, 3, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 4, -3, -3, -4, 3, 3, 0, 0, 0, 0, 0, 0, 0],
    [14, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]


def A_4() -> RatMatrix:
    return RatMatrix(A_4_ROWS)


def B_prime_4() -> RatMatrix:
    return RatMatrix(B_PRIME_4_ROWS_TIMES_6).scale(Fraction(1, 6))


def L_4_at_1() -> RatMatrix:
    return RatMatrix(L_4_AT_1_ROWS)


def D_4() -> RatMatrix:
    return RatMatrix(D_4_ROWS_TIMES_14).scale(Fraction(1, 14))


# n = 2, 3: the matrices are invariant under reordering the partitions
# with equal block counts, so canonical and printed orders agree


def L_2() -> RatMatrix:
    return RatMatrix([
        [0, 1],
        [1, _X - 1],
    ])


def D_2() -> RatMatrix:
    return RatMatrix([
        [1 - _X, 1],
        [1, 0],
    ])


def L_3() -> RatMatrix:
    u = _X - 1
    return RatMatrix([
        [0, 0, 0, 0, 1],
        [0, 0, 1, 1, u],
        [0, 1, 0, 1, u],
        [0, 1, 1, 0, u],
        [1, u, u, u, u ** 2],
    ])


def D_3() -> RatMatrix:
    v = 1 - _X
    doubled = RatMatrix([
        [v ** 2, v, v, v, 2],
        [v, -1, 1, 1, 0],
        [v, 1, -1, 1, 0],
        [v, 1, 1, -1, 0],
        [2, 0, 0, 0, 0],
    ])
    return doubled.map(lambda entry: entry / 2)
