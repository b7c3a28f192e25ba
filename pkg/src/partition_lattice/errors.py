"""
Partition lattice errors
"""


class GroundTooLargeError(ValueError):
    """Raised when a terminal set exceeds the configured lattice cap"""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"Terminal set of size {size} exceeds the cap of {cap}")


class GroundMismatchError(ValueError):
    """Raised when combining partitions of different ground sets"""


class OutOfRangeError(ValueError):
    """Raised when a combinatorial number is requested outside its table range"""
