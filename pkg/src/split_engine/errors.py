"""
Split engine errors
"""


class RegionPreconditionError(ValueError):
    """Raised when a region's splitting formula needs connected parts and a part is not"""


class OnSingularHyperbolaError(ValueError):
    """Raised when the four-term 2-sum formula is evaluated on (x-1)(y-1) = 1"""


class SingularInverseError(ArithmeticError):
    """Raised when a computed coefficient matrix fails its defining matrix equation"""
