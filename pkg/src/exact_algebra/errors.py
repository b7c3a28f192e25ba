"""
Exact algebra errors
"""


class RationalParseError(ValueError):
    """Raised when a string is not a valid exact rational"""


class MissingVariableError(ValueError):
    """Raised when an evaluation assignment does not cover every variable"""

    def __init__(self, missing):
        self.missing = tuple(missing)
        super().__init__(f"Assignment is missing variables: {', '.join(self.missing)}")


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix whose rank is below its dimension"""

    def __init__(self, dim: int, rank: int):
        self.dim = dim
        self.rank = rank
        super().__init__(f"Matrix of dimension {dim} is singular (rank {rank})")
