"""
Splitting Coefficients
Synthesizes the coefficient matrix c_AB of the splitting formula at an
exact point, per region, and checks it against its defining equation
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Optional, Tuple

from exact_algebra import (
    MultiPoly,
    RatMatrix,
    RationalLike,
    mat_inverse,
    mat_one_inverse,
    to_rational,
)
from graph_core import SplitInstance, components, identify
from partition_lattice import MAX_TERMINALS, enumerate_partitions, lattice_for_size

from .errors import RegionPreconditionError, SingularInverseError
from .matrices import build_An, build_Ln, build_Tn
from .regions import Region, RegionKind, classify_region

logger = logging.getLogger(__name__)

Solver = Callable[[RatMatrix], RatMatrix]


@dataclass(frozen=True)
class Connectivity:
    """
    Component counts entering the prefactor (x-1)^(ω(K/A)+ω(H/B)-ω(G))

    contracted_k[i] is ω(K/A_i) and contracted_h[j] is ω(H/B_j) over the
    canonical partition order.
    """

    contracted_k: Tuple[int, ...]
    contracted_h: Tuple[int, ...]
    glued: int
    parts_k: int = 1
    parts_h: int = 1

    @classmethod
    def connected(cls, n: int, max_n: int = MAX_TERMINALS) -> 'Connectivity':
        size = len(lattice_for_size(n, max_n=max_n))
        return cls((1,) * size, (1,) * size, 1)

    @classmethod
    def of_split(cls, split: SplitInstance, max_n: int = MAX_TERMINALS) -> 'Connectivity':
        lattice = enumerate_partitions(split.terminals, max_n=max_n)
        return cls(
            contracted_k=tuple(components(identify(split.K, A)) for A in lattice),
            contracted_h=tuple(components(identify(split.H, A)) for A in lattice),
            glued=components(split.glued()),
            parts_k=components(split.K),
            parts_h=components(split.H),
        )

    @property
    def parts_connected(self) -> bool:
        return self.parts_k == 1 and self.parts_h == 1

    def exponent(self, i: int, j: int) -> int:
        return self.contracted_k[i] + self.contracted_h[j] - self.glued


@dataclass(frozen=True)
class CoeffMatrix:
    """Coefficients c_AB of one splitting, over the canonical partition order"""

    n: int
    region: Region
    entries: RatMatrix
    order: Tuple[str, ...]

    def __getitem__(self, index: Tuple[int, int]):
        return self.entries[index]

    def to_json(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'region': self.region.label,
            'order': list(self.order),
            'entries': self.entries.to_json()['entries'],
        }


def _check_equation(M: RatMatrix, B: RatMatrix, what: str) -> None:
    if M @ B @ M != M:
        raise SingularInverseError(f"{what}: computed matrix does not satisfy M·B·M = M")


def _solve(M: RatMatrix, solver: Optional[Solver], what: str) -> RatMatrix:
    B = (solver or mat_one_inverse)(M)
    _check_equation(M, B, what)
    return B


@lru_cache(maxsize=256)
def _coefficients(
    n: int,
    x: Fraction,
    y: Fraction,
    connectivity: Connectivity,
    solver: Optional[Solver],
    max_n: int
) -> CoeffMatrix:
    lattice = lattice_for_size(n, max_n=max_n)
    blocks = [A.num_blocks for A in lattice]
    region = classify_region(n, x, y)

    if region.kind in (RegionKind.GENERIC, RegionKind.HYPERBOLA_SINGULAR):
        t = (x - 1) * (y - 1)
        T_n = build_Tn(n, t, max_n=max_n)
        default = mat_inverse if region.kind is RegionKind.GENERIC else mat_one_inverse
        B = (solver or default)(T_n)
        _check_equation(T_n, B, f"T_{n}({t})")

        def entry(i: int, j: int) -> Fraction:
            x_power = (x - 1) ** connectivity.exponent(i, j)
            y_power = (y - 1) ** (blocks[i] + blocks[j] - n)
            return B[i, j] * x_power * y_power

        entries = RatMatrix.from_function(len(lattice), entry)

    elif region.kind is RegionKind.X_ONE_LINE:
        A_n = build_An(n, max_n=max_n)
        B_prime = (solver or mat_inverse)(A_n)
        _check_equation(A_n, B_prime, f"A_{n}")
        entries = RatMatrix.from_function(
            len(lattice),
            lambda i, j: B_prime[i, j] * (y - 1) ** (blocks[i] + blocks[j] - n - 1)
        )

    else:
        entries = _solve(build_Ln(n, x, max_n=max_n), solver, f"L_{n}({x})")

    logger.debug(f"Coefficients for n={n} at ({x}, {y}): region {region.label}")
    return CoeffMatrix(n, region, entries, tuple(lattice.labels()))


def coeffs_at_point(
    n: int,
    x: RationalLike,
    y: RationalLike,
    connectivity: Optional[Connectivity] = None,
    solver: Optional[Solver] = None,
    max_n: int = MAX_TERMINALS
) -> CoeffMatrix:
    """
    Splitting coefficients c_AB at an exact point

    generic: c = b (x-1)^(ω(K/A)+ω(H/B)-ω(G)) (y-1)^(|A|+|B|-n) with b = T_n(t)^-1
    hyperbola_singular: the same with b a {1}-inverse of T_n(q)
    x_one_line: c = (y-1)^(|A|+|B|-n-1) b' with b' = A_n^-1
    y_one_line, point_one_one: c = D with L_n(x) D L_n(x) = L_n(x)

    Args:
        n: Number of terminals
        x: Exact x
        y: Exact y
        connectivity: Component counts of the split; None means connected parts
        solver: Replacement for the default inverse / {1}-inverse routine,
            used to compare different solutions
        max_n: Largest accepted n

    Returns:
        CoeffMatrix whose matrix satisfies its region's defining equation

    Raises:
        RegionPreconditionError: On x = 1 or y = 1 with a disconnected part
        SingularInverseError: If the computed matrix fails its defining equation
        SingularMatrixError: If a generic-region matrix is unexpectedly singular
    """
    x = to_rational(x)
    y = to_rational(y)
    if connectivity is None:
        connectivity = Connectivity.connected(n, max_n=max_n)
    region = classify_region(n, x, y)
    if region.needs_connected_parts and not connectivity.parts_connected:
        raise RegionPreconditionError(
            f"Region {region.label} requires connected parts "
            f"(ω(K)={connectivity.parts_k}, ω(H)={connectivity.parts_h})"
        )
    return _coefficients(n, x, y, connectivity, solver, max_n)


def clear_coefficient_cache() -> None:
    _coefficients.cache_clear()


def _interpolate(points, values) -> MultiPoly:
    x = MultiPoly.variable('x')
    result = MultiPoly()
    for i, (xi, vi) in enumerate(zip(points, values)):
        if vi == 0:
            continue
        basis = MultiPoly.constant(vi)
        for j, xj in enumerate(points):
            if j != i:
                basis = basis * (x - xj) / (xi - xj)
        result = result + basis
    return result


@lru_cache(maxsize=8)
def y_one_coefficients_symbolic(n: int) -> RatMatrix:
    """
    D_n(x) = L_n(x)^-1 as a matrix of polynomials in x, for n <= 3

    det L_n(x) is a nonzero constant for n <= 3, so every entry of the
    inverse is a polynomial of degree at most (m-1)(n-1) with m = Bell(n);
    the entries are interpolated from exact pointwise inverses and the
    result is checked symbolically.

    Raises:
        ValueError: If n > 3, where L_n(x) is singular
        SingularInverseError: If the interpolated matrix fails L·D·L = L
    """
    if n > 3:
        raise ValueError(f"L_{n}(x) has no inverse for n > 3")
    m = len(lattice_for_size(n))
    points = [Fraction(k) for k in range((m - 1) * (n - 1) + 1)]
    inverses = [mat_inverse(build_Ln(n, p)) for p in points]
    D = RatMatrix.from_function(
        m, lambda i, j: _interpolate(points, [inv[i, j] for inv in inverses])
    )
    L = build_Ln(n)
    _check_equation(L, D, f"L_{n}(x)")
    return D
