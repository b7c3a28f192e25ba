"""
Run Configuration
One validated, typed view of the command line merged with config/global.yaml
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from exact_algebra import parse_rational
from partition_lattice import MAX_TERMINALS
from tutte_engine import MAX_ORACLE_EDGES

from .presets import Point, resolve_preset

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('text', 'json')


class Command(Enum):
    POLY = 'poly'
    SPLIT = 'split'
    VERIFY = 'verify'
    BENCH = 'bench'


class Method(Enum):
    DC = 'dc'
    ORACLE = 'oracle'
    NEGAMI = 'negami'


def parse_points(pairs: Sequence[Sequence[Any]]) -> Tuple[Point, ...]:
    """Parse [[x, y], ...] rational string pairs"""
    return tuple((parse_rational(str(x)), parse_rational(str(y))) for x, y in pairs)


def _optional_rational(value: Optional[str]) -> Optional[Fraction]:
    return None if value is None else parse_rational(value)


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one command needs

    Points are exact rationals; limits come from settings unless the
    command line overrides them.
    """

    command: Command
    input_path: Optional[str] = None
    x: Optional[Fraction] = None
    y: Optional[Fraction] = None
    max_n: int = MAX_TERMINALS
    max_oracle_edges: int = MAX_ORACLE_EDGES
    method: Method = Method.DC
    output_format: str = 'text'
    output_path: Optional[str] = None
    seed: int = 2024
    count: int = 25
    corpus: bool = False
    coeffs: bool = False
    check: bool = False
    preset: Optional[str] = None
    suites: Tuple[str, ...] = ()
    workers: int = 1
    repeat: int = 1
    points: Tuple[Point, ...] = ()
    settings: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.max_n <= MAX_TERMINALS:
            raise ValueError(f"max_n must be between 1 and {MAX_TERMINALS}, got {self.max_n}")
        if self.max_oracle_edges < 1:
            raise ValueError(f"max_oracle_edges must be positive, got {self.max_oracle_edges}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of: {', '.join(OUTPUT_FORMATS)}")
        if self.count < 0:
            raise ValueError(f"Corpus count must be non-negative, got {self.count}")
        if self.workers < 1:
            raise ValueError(f"Worker count must be positive, got {self.workers}")

    @property
    def point(self) -> Optional[Point]:
        if self.x is None or self.y is None:
            return None
        return self.x, self.y

    @classmethod
    def from_args(
        cls,
        args: Any,
        settings: Mapping[str, Any],
        presets: Optional[Mapping[str, Dict[str, Any]]] = None
    ) -> 'RunConfig':
        """
        Build a RunConfig from parsed arguments and loaded settings

        Args:
            args: argparse namespace
            settings: Validated configuration dictionary
            presets: Preset definitions, needed only with --preset

        Returns:
            RunConfig

        Raises:
            RationalParseError: If a point does not parse
            ValueError: If a value is out of range or a preset does not resolve
        """
        limits = settings.get('limits', {})
        corpus = settings.get('corpus', {})
        verification = settings.get('verification', {})
        bench = settings.get('bench', {})

        x = _optional_rational(getattr(args, 'x', None))
        y = _optional_rational(getattr(args, 'y', None))
        preset = getattr(args, 'preset', None)
        if preset:
            x, y = resolve_preset(preset, presets or {}, x, y)

        seed = getattr(args, 'seed', None)
        count = getattr(args, 'count', None)
        config = cls(
            command=Command(args.command),
            input_path=getattr(args, 'file', None),
            x=x,
            y=y,
            max_n=int(limits.get('max_n', MAX_TERMINALS)),
            max_oracle_edges=int(limits.get('max_oracle_edges', MAX_ORACLE_EDGES)),
            method=Method(getattr(args, 'method', None) or 'dc'),
            output_format=getattr(args, 'format', None) or 'text',
            output_path=getattr(args, 'output', None),
            seed=int(seed if seed is not None else corpus.get('seed', 2024)),
            count=int(count if count is not None else corpus.get('count', 25)),
            corpus=bool(getattr(args, 'corpus', False)),
            coeffs=bool(getattr(args, 'coeffs', False)),
            check=bool(getattr(args, 'check', False)),
            preset=preset,
            suites=tuple(getattr(args, 'suite', None) or ()),
            workers=int(getattr(args, 'workers', None) or verification.get('workers', 1)),
            repeat=int(bench.get('repeat', 1)),
            points=parse_points(bench.get('points', [])),
            settings=settings,
        )
        logger.debug(f"Run configuration: {config}")
        return config
