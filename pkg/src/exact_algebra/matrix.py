"""
Dense Exact Matrices
Square matrices over the rationals (or polynomial entries for symbolic builds)
with exact rank, determinant, inverse and {1}-generalized inverse
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Mapping, Sequence, Tuple, Union

from .errors import SingularMatrixError
from .multipoly import MultiPoly
from .rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

Entry = Union[Fraction, MultiPoly]


def _normalize_entry(value) -> Entry:
    if isinstance(value, MultiPoly):
        return value
    return to_rational(value)


class RatMatrix:
    """Immutable square matrix with exact entries"""

    __slots__ = ('_rows',)

    def __init__(self, rows: Sequence[Sequence[Any]]):
        """
        Build a matrix from its rows

        Args:
            rows: m rows of m entries (int, Fraction, rational string or MultiPoly)

        Raises:
            ValueError: If the matrix is empty or not square
        """
        rows = [list(r) for r in rows]
        m = len(rows)
        if m == 0:
            raise ValueError("Matrix dimension must be positive")
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {m}")
        self._rows: Tuple[Tuple[Entry, ...], ...] = tuple(
            tuple(_normalize_entry(v) for v in row) for row in rows
        )

    @classmethod
    def identity(cls, m: int) -> 'RatMatrix':
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, m: int) -> 'RatMatrix':
        return cls([[0] * m for _ in range(m)])

    @classmethod
    def unit(cls, m: int, i: int, j: int) -> 'RatMatrix':
        """Matrix with a single one at (i, j)"""
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(m)] for r in range(m)])

    @classmethod
    def from_function(cls, m: int, fn: Callable[[int, int], Any]) -> 'RatMatrix':
        return cls([[fn(i, j) for j in range(m)] for i in range(m)])

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'RatMatrix':
        """Parse {"dim": m, "entries": [[...], ...]} with rational strings"""
        matrix = cls(data['entries'])
        if matrix.dim != int(data.get('dim', matrix.dim)):
            raise ValueError(f"Declared dim {data['dim']} does not match entries ({matrix.dim})")
        return matrix

    # ------------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[Tuple[Entry, ...], ...]:
        return self._rows

    def row(self, i: int) -> Tuple[Entry, ...]:
        return self._rows[i]

    def column(self, j: int) -> Tuple[Entry, ...]:
        return tuple(row[j] for row in self._rows)

    def __getitem__(self, index: Tuple[int, int]) -> Entry:
        i, j = index
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"Index {index} outside {self.dim}x{self.dim} matrix")
        return self._rows[i][j]

    def is_rational(self) -> bool:
        return all(isinstance(v, Fraction) for row in self._rows for v in row)

    def is_symmetric(self) -> bool:
        m = self.dim
        return all(self._rows[i][j] == self._rows[j][i] for i in range(m) for j in range(i + 1, m))

    # ------------------------------------------------------------------
    # Arithmetic

    def _check_same_dim(self, other: 'RatMatrix') -> None:
        if not isinstance(other, RatMatrix) or other.dim != self.dim:
            raise ValueError("Matrix dimensions do not match")

    def __add__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_dim(other)
        return RatMatrix([
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        ])

    def __sub__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_dim(other)
        return RatMatrix([
            [a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)
        ])

    def __neg__(self) -> 'RatMatrix':
        return self.map(lambda v: -v)

    def __matmul__(self, other: 'RatMatrix') -> 'RatMatrix':
        self._check_same_dim(other)
        m = self.dim
        columns = [other.column(j) for j in range(m)]
        result = []
        for row in self._rows:
            out_row = []
            for col in columns:
                total = Fraction(0)
                for a, b in zip(row, col):
                    if a != 0 and b != 0:
                        total = a * b + total
                out_row.append(total)
            result.append(out_row)
        return RatMatrix(result)

    def scale(self, factor: Union[RationalLike, MultiPoly]) -> 'RatMatrix':
        factor = _normalize_entry(factor)
        return self.map(lambda v: v * factor)

    def map(self, fn: Callable[[Entry], Any]) -> 'RatMatrix':
        return RatMatrix([[fn(v) for v in row] for row in self._rows])

    def transpose(self) -> 'RatMatrix':
        return RatMatrix([self.column(j) for j in range(self.dim)])

    def conjugate(self, permutation: Sequence[int]) -> 'RatMatrix':
        """Matrix whose (i, j) entry is self[p[i], p[j]]"""
        if sorted(permutation) != list(range(self.dim)):
            raise ValueError(f"Not a permutation of {self.dim} indices: {permutation}")
        return RatMatrix([
            [self._rows[pi][pj] for pj in permutation] for pi in permutation
        ])

    def evaluate(self, assignment: Mapping[str, RationalLike]) -> 'RatMatrix':
        """Evaluate polynomial entries at a rational point"""
        return self.map(lambda v: v.evaluate(assignment) if isinstance(v, MultiPoly) else v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for r1, r2 in zip(self._rows, other._rows) for a, b in zip(r1, r2)
        )

    def __hash__(self) -> int:
        return hash(self._rows)

    # ------------------------------------------------------------------

    def to_json(self) -> Dict[str, Any]:
        def render(v: Entry) -> str:
            return v.to_text() if isinstance(v, MultiPoly) else format_rational(v)

        return {
            'dim': self.dim,
            'entries': [[render(v) for v in row] for row in self._rows],
        }

    def __repr__(self) -> str:
        return f"RatMatrix(dim={self.dim})"


# ----------------------------------------------------------------------
# Exact elimination


def _rational_rows(M: RatMatrix) -> List[List[Fraction]]:
    rows = []
    for row in M.rows:
        out = []
        for v in row:
            if isinstance(v, MultiPoly):
                if not v.is_constant():
                    raise TypeError("Elimination requires rational entries; evaluate the matrix first")
                v = v.constant_value()
            out.append(v)
        rows.append(out)
    return rows


def _echelon(rows: List[List[Fraction]]) -> Tuple[int, Fraction]:
    """In-place row echelon form; returns (rank, determinant)"""
    m = len(rows)
    n_cols = len(rows[0])
    rank = 0
    det = Fraction(1)
    for col in range(n_cols):
        pivot = next((r for r in range(rank, m) if rows[r][col] != 0), None)
        if pivot is None:
            det = Fraction(0)
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            det = -det
        p = rows[rank][col]
        det *= p
        for r in range(rank + 1, m):
            factor = rows[r][col]
            if factor == 0:
                continue
            factor /= p
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == m:
            break
    if rank < min(m, n_cols):
        det = Fraction(0)
    return rank, det


def mat_rank(M: RatMatrix) -> int:
    """Rank by exact rational Gaussian elimination"""
    rank, _ = _echelon(_rational_rows(M))
    return rank


def mat_det(M: RatMatrix) -> Fraction:
    """Determinant by exact rational Gaussian elimination"""
    _, det = _echelon(_rational_rows(M))
    return det


def mat_inverse(M: RatMatrix) -> RatMatrix:
    """
    Exact inverse by Gauss-Jordan elimination

    Raises:
        SingularMatrixError: If rank(M) < dim(M)
    """
    m = M.dim
    rows = _rational_rows(M)
    aug = [row + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(rows)]

    for col in range(m):
        pivot = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError(m, mat_rank(M))
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]

    return RatMatrix([row[m:] for row in aug])


def one_inverse_factors(M: RatMatrix) -> Tuple[RatMatrix, RatMatrix, int]:
    """
    Full-pivot elimination P·M·Q = [[I_r, 0], [0, 0]]

    Pivots are taken at the smallest row index, then the smallest column
    index, among nonzero entries of the remaining block.

    Returns:
        (P, Q, r) with P and Q invertible and r = rank(M)
    """
    m = M.dim
    W = _rational_rows(M)
    P = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    Q = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]

    r = 0
    while r < m:
        pivot = next(
            ((i, j) for i in range(r, m) for j in range(r, m) if W[i][j] != 0),
            None
        )
        if pivot is None:
            break
        i, j = pivot

        if i != r:
            W[r], W[i] = W[i], W[r]
            P[r], P[i] = P[i], P[r]
        if j != r:
            for row in W:
                row[r], row[j] = row[j], row[r]
            for row in Q:
                row[r], row[j] = row[j], row[r]

        p = W[r][r]
        W[r] = [v / p for v in W[r]]
        P[r] = [v / p for v in P[r]]

        for k in range(m):
            if k != r and W[k][r] != 0:
                factor = W[k][r]
                W[k] = [a - factor * b for a, b in zip(W[k], W[r])]
                P[k] = [a - factor * b for a, b in zip(P[k], P[r])]

        for c in range(r + 1, m):
            factor = W[r][c]
            if factor != 0:
                for row in W:
                    row[c] -= factor * row[r]
                for row in Q:
                    row[c] -= factor * row[r]
        r += 1

    logger.debug(f"Full-pivot elimination of {m}x{m} matrix: rank {r}")
    return RatMatrix(P), RatMatrix(Q), r


def mat_one_inverse(M: RatMatrix) -> RatMatrix:
    """
    Deterministic {1}-inverse: B with M·B·M = M

    Computed as Q·[[I_r, 0], [0, 0]]·P from one_inverse_factors; equals
    the inverse when M is invertible.
    """
    P, Q, r = one_inverse_factors(M)
    m = M.dim
    # Q·E_r·P only uses the first r columns of Q and first r rows of P
    return RatMatrix.from_function(
        m, lambda i, j: sum((Q[i, k] * P[k, j] for k in range(r)), Fraction(0))
    )


def solution_space_dim(M: RatMatrix) -> int:
    """Dimension of the solution space of M·B·M = M: m² − rank(M)²"""
    r = mat_rank(M)
    return M.dim ** 2 - r ** 2
