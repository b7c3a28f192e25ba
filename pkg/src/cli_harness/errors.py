"""
CLI Errors
Exit codes and the mapping from exceptions onto them
"""

import yaml

from graph_core import GraphFormatError
from split_engine import OnSingularHyperbolaError, RegionPreconditionError, SingularInverseError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REGION = 2
EXIT_VERIFICATION = 3


def exit_code_for(exc: BaseException) -> int:
    """
    Exit code for an exception raised while running a command

    Region errors are ValueErrors too, so they are matched first.
    """
    if isinstance(exc, (RegionPreconditionError, OnSingularHyperbolaError)):
        return EXIT_REGION
    if isinstance(exc, SingularInverseError):
        return EXIT_VERIFICATION
    if isinstance(exc, (ValueError, GraphFormatError, OSError, yaml.YAMLError, KeyError, TypeError)):
        return EXIT_INPUT
    return EXIT_VERIFICATION
