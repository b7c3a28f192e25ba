"""
Bell and Stirling numbers
"""

from functools import lru_cache

from .errors import OutOfRangeError

MAX_STIRLING_N = 8


def _check_range(n: int, k: int, max_n: int) -> None:
    if not (0 <= k <= n <= max_n):
        raise OutOfRangeError(f"Need 0 <= k <= n <= {max_n}, got n={n}, k={k}")


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def stirling2(n: int, k: int, max_n: int = MAX_STIRLING_N) -> int:
    """
    Stirling number of the second kind S(n, k)

    S(0, 0) = 1 and S(n, 0) = 0 for n >= 1.

    Raises:
        OutOfRangeError: Unless 0 <= k <= n <= max_n
    """
    _check_range(n, k, max_n)
    return _stirling2(n, k)


def bell(n: int, max_n: int = MAX_STIRLING_N) -> int:
    """Number of partitions of an n-set"""
    _check_range(n, 0, max_n)
    return sum(_stirling2(n, k) for k in range(n + 1))
