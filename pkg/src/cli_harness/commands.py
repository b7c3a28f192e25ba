"""
Commands
The poly, split, verify and bench commands and the argument parser that
drives them. Results go to stdout; logs go to stderr.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

from config_manager import ConfigManager
from exact_algebra import format_rational
from graph_core import load_graph, load_split
from report_generator import ReportManager
from split_engine import split_evaluate
from tutte_engine import NegamiMode, negami, tutte_at, tutte_dc, tutte_oracle

from .benchmark import run_benchmark
from .corpus import CorpusSettings, generate_corpus
from .errors import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, exit_code_for
from .logging_setup import setup_logging
from .run_config import Command, Method, RunConfig
from .verification import ALL_SUITES, VerifyOptions, run_verification

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_DIR = str(Path(__file__).resolve().parents[2] / 'config')


@dataclass(frozen=True)
class CommandOutcome:
    output: str
    exit_code: int = EXIT_OK


def _render(report: Dict[str, Any], text: str, config: RunConfig) -> str:
    """JSON through the report generator, text as given; also write --output"""
    rendered = ReportManager().render(report, 'json') if config.output_format == 'json' else text
    if config.output_path:
        path = Path(config.output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(rendered + '\n', encoding='utf-8')
        logger.info(f"Result written to {path}")
    return rendered


def cmd_poly(config: RunConfig) -> CommandOutcome:
    """
    Tutte or Negami polynomial of a graph file

    Raises:
        GraphFormatError, GraphValidationError: On an invalid file
        TooLargeError: With the oracle method on a graph above the edge cap
    """
    G = load_graph(config.input_path)
    logger.info(f"Computing the {config.method.value} polynomial of {G}")

    if config.method is Method.ORACLE:
        poly = tutte_oracle(G, max_edges=config.max_oracle_edges)
    elif config.method is Method.NEGAMI:
        poly = negami(G, mode=NegamiMode.RECURRENCE)
    else:
        poly = tutte_dc(G)
    variables = ('t', 'x', 'y') if config.method is Method.NEGAMI else ('x', 'y')

    report = {
        'command': 'poly',
        'method': config.method.value,
        'vertices': G.num_vertices,
        'edges': G.num_edges,
        'polynomial': poly.to_text(),
        'variables': list(variables),
        'terms': poly.to_json(variables),
    }
    return CommandOutcome(_render(report, poly.to_text(), config))


def cmd_split(config: RunConfig) -> CommandOutcome:
    """
    Splitting value of a split file at one point

    With --check the value is compared against deletion-contraction on
    the glued graph; a mismatch exits with the verification code.

    Raises:
        ValueError: If no point was given
        RegionPreconditionError: On x = 1 or y = 1 with a disconnected part
    """
    if config.point is None:
        raise ValueError("split needs --x and --y, or a --preset that fixes them")
    split = load_split(config.input_path)
    x, y = config.point
    result = split_evaluate(split, x, y, max_n=config.max_n)

    report = {'command': 'split', 'x': format_rational(x), 'y': format_rational(y)}
    report.update(result.to_json(include_coeffs=config.coeffs))
    lines = [f"region: {result.region.label}, value: {format_rational(result.value)}"]

    if config.coeffs:
        lines.append(f"coefficients (order: {' '.join(result.coefficients.order)}):")
        for row in result.coefficients.entries.to_json()['entries']:
            lines.append('  ' + ' '.join(row))

    exit_code = EXIT_OK
    if config.check:
        direct = tutte_at(split.glued(), x, y)
        matches = direct == result.value
        report['check'] = {'direct': format_rational(direct), 'passed': matches}
        lines.append(f"check: {'ok' if matches else 'MISMATCH'} (direct {format_rational(direct)})")
        if not matches:
            logger.error(f"Split value {result.value} differs from direct value {direct} at ({x}, {y})")
            exit_code = EXIT_VERIFICATION

    return CommandOutcome(_render(report, '\n'.join(lines), config), exit_code)


def cmd_verify(config: RunConfig) -> CommandOutcome:
    """
    Run the verification suites on a split file or a random corpus

    Raises:
        ValueError: If both a file and --corpus were given, or a suite is unknown
    """
    if config.input_path and config.corpus:
        raise ValueError("verify takes either a split file or --corpus, not both")

    if config.input_path:
        instances = [load_split(config.input_path)]
        source = config.input_path
    else:
        bounds = CorpusSettings.from_settings(config.settings)
        instances = generate_corpus(config.seed, config.count, bounds)
        source = f"corpus seed={config.seed} count={config.count}"

    options = VerifyOptions.from_settings(
        config.settings,
        suites=config.suites,
        seed=config.seed,
        max_n=config.max_n,
        max_oracle_edges=config.max_oracle_edges,
    )
    report = run_verification(instances, options, workers=config.workers, source=source)
    output = ReportManager().emit(report, config.output_format, config.output_path)
    return CommandOutcome(output, EXIT_OK if report['passed'] else EXIT_VERIFICATION)


def cmd_bench(config: RunConfig) -> CommandOutcome:
    """
    Direct vs split timing on a split file

    Uses the command-line point when given, else bench.points from settings.
    """
    split = load_split(config.input_path)
    points = [config.point] if config.point is not None else list(config.points)
    if not points:
        raise ValueError("bench needs --x and --y, a --preset, or bench.points in the configuration")
    report = run_benchmark(split, points, repeat=config.repeat, source=config.input_path, max_n=config.max_n)
    output = ReportManager().emit(report, config.output_format, config.output_path)
    return CommandOutcome(output, EXIT_OK if report['passed'] else EXIT_VERIFICATION)


COMMANDS: Dict[Command, Callable[[RunConfig], CommandOutcome]] = {
    Command.POLY: cmd_poly,
    Command.SPLIT: cmd_split,
    Command.VERIFY: cmd_verify,
    Command.BENCH: cmd_bench,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the input-validation code"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_point_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--x', help='x coordinate as an exact rational, e.g. 2 or 3/2; write negatives as --x=-3/2')
    parser.add_argument('--y', help='y coordinate as an exact rational')
    parser.add_argument(
        '--preset',
        help='Specialization preset from config/presets.yaml, e.g. ising, reliability or potts:3'
    )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the four commands"""
    common = _ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')
    common.add_argument('--output', '-o', default=None, help='Also write the result to this file')
    common.add_argument('--config-dir', default=DEFAULT_CONFIG_DIR, help='Configuration directory')
    common.add_argument('--config', default=None, help='YAML file overriding config/global.yaml')
    common.add_argument('--verbose', '-v', action='store_true', help='Enable debug logging')

    parser = _ArgumentParser(
        prog='tutte-split',
        description='Exact Tutte polynomials of glued graphs by splitting formulas'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    poly = subparsers.add_parser('poly', parents=[common], help='Polynomial of a graph file')
    poly.add_argument('file', help='Graph JSON file')
    poly.add_argument(
        '--method',
        choices=[m.value for m in Method],
        default=Method.DC.value,
        help='dc: deletion-contraction, oracle: subgraph expansion, negami: Negami polynomial'
    )

    split = subparsers.add_parser('split', parents=[common], help='Splitting value of a split file')
    split.add_argument('file', help='Split JSON file')
    _add_point_arguments(split)
    split.add_argument('--coeffs', action='store_true', help='Print the coefficient matrix')
    split.add_argument('--check', action='store_true', help='Compare with direct evaluation')

    verify = subparsers.add_parser('verify', parents=[common], help='Run the verification suites')
    verify.add_argument('file', nargs='?', default=None, help='Split JSON file; omit to use a random corpus')
    verify.add_argument('--corpus', action='store_true', help='Use a random corpus')
    verify.add_argument('--seed', type=int, default=None, help='Corpus and sampling seed')
    verify.add_argument('--count', type=int, default=None, help='Corpus size')
    verify.add_argument(
        '--suite',
        action='append',
        choices=list(ALL_SUITES),
        help='Run only this suite; may be repeated'
    )
    verify.add_argument('--workers', type=int, default=None, help='Process pool size for corpus instances')

    bench = subparsers.add_parser('bench', parents=[common], help='Direct vs split timing')
    bench.add_argument('file', help='Split JSON file')
    _add_point_arguments(bench)
    bench.add_argument('--repeat', type=int, default=None, help='Runs per measurement')

    return parser


def _configure_logging(args: argparse.Namespace, settings: Optional[Dict[str, Any]] = None) -> None:
    logging_settings = (settings or {}).get('system', {}).get('logging', {})
    level = logging_settings.get('level') or os.getenv('LOG_LEVEL', 'info')
    fmt = logging_settings.get('format') or os.getenv('LOG_FORMAT', 'text')
    setup_logging('debug' if args.verbose else str(level).lower(), str(fmt).lower())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, load configuration and run one command

    Returns:
        Process exit code: 0 ok, 1 input validation, 2 region precondition,
        3 verification failure
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        _configure_logging(args)
        manager = ConfigManager(config_dir=args.config_dir)
        settings = manager.get_settings(args.config)
        _configure_logging(args, settings)

        presets = manager.get_presets() if getattr(args, 'preset', None) else {}
        if getattr(args, 'repeat', None) is not None:
            settings = {**settings, 'bench': {**settings.get('bench', {}), 'repeat': args.repeat}}
        config = RunConfig.from_args(args, settings, presets)

        logger.info(f"Running '{config.command.value}'")
        outcome = COMMANDS[config.command](config)
        print(outcome.output)
        return outcome.exit_code

    except Exception as e:
        code = exit_code_for(e)
        logger.error(f"{type(e).__name__}: {e}")
        logger.debug("Traceback", exc_info=True)
        if args.format == 'json':
            print(json.dumps({'error': type(e).__name__, 'message': str(e), 'exit_code': code}, indent=2))
        return code