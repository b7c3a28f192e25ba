from fractions import Fraction

import pytest

from exact_algebra import mat_one_inverse, mat_rank, solution_space_dim
from partition_lattice import stirling2
from split_engine import (
    alternative_one_inverse,
    build_Ln,
    build_Tn,
    ln_invertibility,
    solution_dim_formula,
    split_evaluate,
    two_solutions_demo,
)
from tutte_engine import tutte_at


@pytest.mark.parametrize('n, t, expected', [
    (2, 0, 4 - 0),
    (2, 1, 4 - 1),
    (3, 1, 25 - 1),
    (3, 2, 25 - 16),
    (4, 1, 225 - 1),
    (4, 2, 225 - 64),
    (4, 3, 225 - 196),
    (4, 4, 0),
    (4, Fraction(5, 2), 0),
    (4, -1, 0),
])
def test_solution_dimension_formula(n, t, expected):
    assert solution_dim_formula(n, t) == expected


@pytest.mark.parametrize('n', [2, 3, 4])
def test_formula_matches_computed_rank(n):
    for q in range(n):
        T_n = build_Tn(n, q)
        assert mat_rank(T_n) == sum(stirling2(n, i) for i in range(q + 1))
        assert solution_space_dim(T_n) == solution_dim_formula(n, q)


@pytest.mark.parametrize('n, x, invertible', [
    (1, 1, True),
    (2, 1, True),
    (2, 5, True),
    (3, 1, True),
    (3, Fraction(-2, 3), True),
    (4, 1, False),
    (4, 0, False),
    (4, 3, False),
    (5, 2, False),
])
def test_line_matrix_invertibility(n, x, invertible):
    assert ln_invertibility(n, x) is invertible


def test_two_distinct_solutions():
    L = build_Ln(4, 1)
    first, second = two_solutions_demo(4, 1)
    assert first != second
    assert L @ first @ L == L
    assert L @ second @ L == L


def test_alternative_solution_needs_a_singular_matrix():
    with pytest.raises(ValueError):
        alternative_one_inverse(build_Ln(3, 2))
    with pytest.raises(ValueError):
        two_solutions_demo(3, 1)


def test_alternative_solution_shift():
    L = build_Ln(4, 3)
    base = mat_one_inverse(L)
    shifted = alternative_one_inverse(L, shift=Fraction(5, 2))
    assert shifted != base
    assert L @ shifted @ L == L


@pytest.mark.parametrize('x', [1, 3, Fraction(-1, 2)])
def test_distinct_solutions_give_the_same_value(four_terminal_split, x):
    first = split_evaluate(four_terminal_split, x, 1)
    second = split_evaluate(four_terminal_split, x, 1, solver=alternative_one_inverse)
    assert first.coefficients.entries != second.coefficients.entries
    assert first.value == second.value == tutte_at(four_terminal_split.glued(), x, 1)
