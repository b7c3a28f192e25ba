"""
CLI Harness Module
Command-line interface: polynomial and splitting computation, verification
suites over a random corpus and a direct-vs-split benchmark
"""

from .errors import EXIT_INPUT, EXIT_OK, EXIT_REGION, EXIT_VERIFICATION, exit_code_for
from .logging_setup import setup_logging
from .presets import parse_preset_spec, resolve_preset
from .run_config import Command, Method, RunConfig, parse_points
from .corpus import CorpusSettings, generate_corpus
from .verification import (
    ALL_SUITES,
    INSTANCE_SUITES,
    MATRIX_SUITES,
    SuiteResult,
    VerifyOptions,
    check_instance,
    hyperbola_points,
    run_verification,
)
from .benchmark import run_benchmark
from .commands import CommandOutcome, build_parser, cmd_bench, cmd_poly, cmd_split, cmd_verify, main

__all__ = [
    'EXIT_INPUT',
    'EXIT_OK',
    'EXIT_REGION',
    'EXIT_VERIFICATION',
    'exit_code_for',
    'setup_logging',
    'parse_preset_spec',
    'resolve_preset',
    'Command',
    'Method',
    'RunConfig',
    'parse_points',
    'CorpusSettings',
    'generate_corpus',
    'ALL_SUITES',
    'INSTANCE_SUITES',
    'MATRIX_SUITES',
    'SuiteResult',
    'VerifyOptions',
    'check_instance',
    'hyperbola_points',
    'run_verification',
    'run_benchmark',
    'CommandOutcome',
    'build_parser',
    'cmd_bench',
    'cmd_poly',
    'cmd_split',
    'cmd_verify',
    'main',
]
