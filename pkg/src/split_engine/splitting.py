"""
Splitting Evaluation
Evaluates T(K ⊕ H; x, y) from Tutte values of the contractions K/A and H/B
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from exact_algebra import RationalLike, format_rational, to_rational
from graph_core import Multigraph, SplitInstance, components, glue, identify
from partition_lattice import MAX_TERMINALS, Partition, enumerate_partitions
from tutte_engine import tutte_at

from .coefficients import CoeffMatrix, Connectivity, Solver, coeffs_at_point
from .errors import OnSingularHyperbolaError, RegionPreconditionError
from .regions import Region, classify_region

logger = logging.getLogger(__name__)

Evaluator = Callable[[Multigraph, Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class SplitResult:
    """Value of one splitting evaluation with the coefficients that produced it"""

    region: Region
    value: Fraction
    coefficients: CoeffMatrix

    def to_json(self, include_coeffs: bool = False) -> Dict:
        data = {
            'region': self.region.label,
            'value': format_rational(self.value),
        }
        if include_coeffs:
            data['coefficients'] = self.coefficients.to_json()
        return data


def contraction_values(
    G: Multigraph,
    partitions: Sequence[Partition],
    x: Fraction,
    y: Fraction,
    evaluator: Evaluator = tutte_at
) -> List[Fraction]:
    """T(G/A; x, y) for each terminal partition A"""
    return [evaluator(identify(G, A), x, y) for A in partitions]


def split_evaluate(
    split: SplitInstance,
    x: RationalLike,
    y: RationalLike,
    solver: Optional[Solver] = None,
    max_n: int = MAX_TERMINALS,
    evaluator: Evaluator = tutte_at
) -> SplitResult:
    """
    Evaluate the splitting formula on a two-part split

    Args:
        split: Parts K and H with their shared terminals
        x: Exact x
        y: Exact y
        solver: Optional replacement for the default (generalized) inverse
        max_n: Largest accepted terminal count
        evaluator: Exact T(G; x, y) routine for the contractions

    Returns:
        SplitResult with the region, the exact value and the coefficients

    Raises:
        RegionPreconditionError: If the region needs connected parts and one is not
        TerminalMismatchError, SharedNonTerminalError: If the parts cannot be glued
    """
    x = to_rational(x)
    y = to_rational(y)
    split.glued()

    lattice = enumerate_partitions(split.terminals, max_n=max_n)
    region = classify_region(split.n, x, y)
    if region.needs_connected_parts and (components(split.K) != 1 or components(split.H) != 1):
        raise RegionPreconditionError(
            f"Region {region.label} requires connected parts; "
            f"ω(K)={components(split.K)}, ω(H)={components(split.H)}"
        )

    connectivity = Connectivity.of_split(split, max_n=max_n)
    coefficients = coeffs_at_point(split.n, x, y, connectivity=connectivity, solver=solver, max_n=max_n)

    k_values = contraction_values(split.K, lattice.ordered, x, y, evaluator)
    h_values = contraction_values(split.H, lattice.ordered, x, y, evaluator)

    value = Fraction(0)
    for i, tk in enumerate(k_values):
        if tk == 0:
            continue
        for j, th in enumerate(h_values):
            c = coefficients[i, j]
            if c != 0:
                value += c * tk * th

    logger.debug(f"Split evaluation at ({x}, {y}), n={split.n}: {region.label} -> {value}")
    return SplitResult(region, value, coefficients)


def split_eval(
    K: Multigraph,
    H: Multigraph,
    terminals: Sequence[str],
    x: RationalLike,
    y: RationalLike,
    solver: Optional[Solver] = None
) -> Fraction:
    """T(glue(K, H, U); x, y) through the splitting formula"""
    glue(K, H, terminals)
    return split_evaluate(SplitInstance(K, H, tuple(terminals)), x, y, solver=solver).value


def _two_terminal_parts(split: SplitInstance):
    if split.n != 2:
        raise ValueError(f"2-sum formulas need exactly two terminals, got {split.n}")
    if components(split.K) != 1 or components(split.H) != 1:
        raise RegionPreconditionError("2-sum formulas need connected parts")
    lattice = enumerate_partitions(split.terminals)
    minimal = lattice[0]
    return split.K, split.H, identify(split.K, minimal), identify(split.H, minimal)


def brylawski_eval(split: SplitInstance, x: RationalLike, y: RationalLike) -> Fraction:
    """
    Four-term 2-sum formula

    T(G) = ((y-1) T(K) T(H) - T(K) T(H/A) - T(K/A) T(H) + (x-1) T(K/A) T(H/A))
           / ((x-1)(y-1) - 1)
    with A the one-block partition of the two terminals.

    Raises:
        ValueError: If the split does not have exactly two terminals
        RegionPreconditionError: If a part is disconnected
        OnSingularHyperbolaError: If (x-1)(y-1) = 1
    """
    x = to_rational(x)
    y = to_rational(y)
    K, H, K_A, H_A = _two_terminal_parts(split)
    denominator = (x - 1) * (y - 1) - 1
    if denominator == 0:
        raise OnSingularHyperbolaError(f"(x-1)(y-1) = 1 at ({x}, {y}); the 2-sum formula is undefined")

    tk, th = tutte_at(K, x, y), tutte_at(H, x, y)
    tka, tha = tutte_at(K_A, x, y), tutte_at(H_A, x, y)
    return ((y - 1) * tk * th - tk * tha - tka * th + (x - 1) * tka * tha) / denominator


def hyperbola_one_term_splittings(split: SplitInstance, x: RationalLike, y: RationalLike) -> Dict[str, Fraction]:
    """
    The two one-term splittings valid on (x-1)(y-1) = 1 for n = 2

    'discrete': (y-1) T(K) T(H), from the {1}-inverse of T_2(1) with a
    single one at the discrete-discrete entry.
    'minimal': (x-1) T(K/A) T(H/A), from the one at the minimal-minimal entry.

    Raises:
        ValueError: If the split does not have exactly two terminals or the point is off t = 1
        RegionPreconditionError: If a part is disconnected
    """
    x = to_rational(x)
    y = to_rational(y)
    if (x - 1) * (y - 1) != 1:
        raise ValueError(f"({x}, {y}) is not on (x-1)(y-1) = 1")
    K, H, K_A, H_A = _two_terminal_parts(split)
    return {
        'discrete': (y - 1) * tutte_at(K, x, y) * tutte_at(H, x, y),
        'minimal': (x - 1) * tutte_at(K_A, x, y) * tutte_at(H_A, x, y),
    }
