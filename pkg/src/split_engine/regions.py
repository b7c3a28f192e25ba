"""
Evaluation Regions
Which splitting formula applies at an exact point (x, y) for n terminals
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from exact_algebra import RationalLike, to_rational

logger = logging.getLogger(__name__)


class RegionKind(Enum):
    GENERIC = 'generic'
    HYPERBOLA_SINGULAR = 'hyperbola_singular'
    X_ONE_LINE = 'x_one_line'
    Y_ONE_LINE = 'y_one_line'
    POINT_ONE_ONE = 'point_one_one'


@dataclass(frozen=True)
class Region:
    """
    Region of the plane for a given terminal count

    q is set only for HYPERBOLA_SINGULAR and equals (x-1)(y-1).
    """

    kind: RegionKind
    q: Optional[int] = None

    @property
    def label(self) -> str:
        if self.kind is RegionKind.HYPERBOLA_SINGULAR:
            return f"{self.kind.value}({self.q})"
        return self.kind.value

    @property
    def needs_connected_parts(self) -> bool:
        return self.kind in (RegionKind.X_ONE_LINE, RegionKind.Y_ONE_LINE, RegionKind.POINT_ONE_ONE)

    def __str__(self) -> str:
        return self.label


def classify_region(n: int, x: RationalLike, y: RationalLike) -> Region:
    """
    Classify an exact point

    The cases are checked in order (1, 1), x = 1, y = 1, then
    (x-1)(y-1) in {1, ..., n-1}; everything else is generic. t = 0 only
    happens on the two lines, so no separate branch exists for it.
    """
    x = to_rational(x)
    y = to_rational(y)
    if x == 1 and y == 1:
        region = Region(RegionKind.POINT_ONE_ONE)
    elif x == 1:
        region = Region(RegionKind.X_ONE_LINE)
    elif y == 1:
        region = Region(RegionKind.Y_ONE_LINE)
    else:
        t = (x - 1) * (y - 1)
        if t.denominator == 1 and 1 <= t < n:
            region = Region(RegionKind.HYPERBOLA_SINGULAR, int(t))
        else:
            region = Region(RegionKind.GENERIC)
    logger.debug(f"Point ({x}, {y}) with n={n}: {region.label}")
    return region


def hyperbola_parameter(x: RationalLike, y: RationalLike) -> Fraction:
    """t = (x-1)(y-1)"""
    return (to_rational(x) - 1) * (to_rational(y) - 1)
