"""Command-line entry point.

Exit codes: 0 success, 2 usage or precondition, 3 negative result,
4 undecided (a cap was hit), 5 inconsistent data.
"""
import argparse
import sys
from typing import List, Optional

import structlog
from pydantic import ValidationError

from apps.cli.commands import bounds, catalog, groebner, ideal, search, verify, zeta
from apps.cli.config import Settings
from apps.cli.exit_codes import ExitCode
from apps.cli.logging_config import setup_logging
from packages.core.errors import (
    AlgebraError,
    InconsistentCountsError,
    InvalidZetaError,
    ReconstructionError,
    ResourceCapExceeded,
    VerificationMismatchError,
)

logger = structlog.get_logger()

COMMANDS = (ideal, groebner, search, zeta, bounds, verify, catalog)

_INCONSISTENT = (
    InconsistentCountsError,
    ReconstructionError,
    InvalidZetaError,
    VerificationMismatchError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sos-formulas",
        description="Sums-of-squares formulas over algebraically closed and finite fields",
    )
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-format", dest="log_format", choices=["console", "json"])
    parser.add_argument("--bit-cap", dest="bit_cap", type=int, help="Largest exact bound, in bits")
    parser.add_argument("--threads", type=int, help="Worker processes for search and counting")
    parser.add_argument("--seed", type=int, help="Seed for randomized drivers")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def settings_from_args(args: argparse.Namespace) -> Settings:
    """Every Settings field whose flag was given; defaults for the rest."""
    given = {
        name: value
        for name, value in vars(args).items()
        if name in Settings.model_fields and value is not None
    }
    return Settings(**given)


def exit_code_for(exc: BaseException) -> Optional[ExitCode]:
    if isinstance(exc, ResourceCapExceeded):
        return ExitCode.UNDECIDED
    if isinstance(exc, _INCONSISTENT):
        return ExitCode.INCONSISTENT
    if isinstance(exc, (AlgebraError, ValueError, ValidationError, OSError)):
        return ExitCode.USAGE
    return None


def _message(exc: BaseException) -> str:
    if isinstance(exc, AlgebraError):
        return exc.message
    if isinstance(exc, ValidationError):
        return f"invalid input: {exc.error_count()} error(s); {exc.errors()[0]['msg']}"
    return str(exc)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitCode.OK if exc.code == 0 else ExitCode.USAGE

    # Exact bounds can run to a million bits.
    sys.set_int_max_str_digits(0)

    try:
        settings = settings_from_args(args)
    except ValidationError as exc:
        print(f"error: {_message(exc)}", file=sys.stderr)
        return ExitCode.USAGE
    setup_logging(settings)

    try:
        return int(args.handler(args, settings))
    except Exception as exc:
        code = exit_code_for(exc)
        if code is None:
            raise
        event = {
            "command": args.command,
            "error": type(exc).__name__,
            "exit_code": int(code),
        }
        if isinstance(exc, ResourceCapExceeded):
            event.update(limit_name=exc.limit_name, limit=exc.limit)
            logger.warning("cli.undecided", **event)
            print(f"undecided: {_message(exc)}", file=sys.stderr)
        else:
            logger.warning("cli.failed", message=_message(exc), **event)
            print(f"error: {_message(exc)}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
