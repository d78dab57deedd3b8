"""
Polymatroid Toric Toolkit: entry point

One subcommand per operation. Every command writes a JSON report to stdout
(or --output) and a short summary to stderr.

Usage:
    python -m src.main check data/nonsep.basis
    python -m src.main white data/nonsep.basis --moves proper --d-max 3
    python -m src.main corpus --count 100 --suites white --jobs 4
"""

import argparse
import logging
import sys

from pydantic import ValidationError as PydanticValidationError

from src import __version__
from src.commands.basis_commands import register_basis_commands
from src.commands.experiment_commands import register_experiment_commands
from src.commands.invariant_commands import register_invariant_commands
from src.commands.report import common_options
from src.commands.toric_commands import register_toric_commands
from src.commands.transversal_commands import register_transversal_commands
from src.files.writers import emit
from src.utils.errors import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS, PolymatroidError
from src.utils.formatters import format_summary

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polymatroid",
        description="Discrete polymatroids, their toric ideals and algebra invariants",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = common_options()

    register_basis_commands(subparsers, common)
    register_toric_commands(subparsers, common)
    register_transversal_commands(subparsers, common)
    register_invariant_commands(subparsers, common)
    register_experiment_commands(subparsers, common)
    return parser


def _configure_logging(level: str) -> None:
    # stdout is reserved for the JSON report
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT, stream=sys.stderr, force=True)


def run(args, settings) -> int:
    """Run the selected handler and map its outcome to an exit code."""
    try:
        report = args.handler(args, settings)
    except PydanticValidationError as e:
        print(f"Validation error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PolymatroidError as e:
        print(f"Error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}")
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED

    emit(report.to_json(include_timings=args.timings), args.output)
    print(format_summary(report, report.timings if args.timings else None), file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    # Resolve settings (lazy import to avoid env validation at import time)
    from src.config.env import get_settings

    try:
        settings = get_settings()
    except PydanticValidationError as e:
        print(f"Configuration error: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    _configure_logging(args.log_level or settings.log_level)
    logger.debug(f"polymatroid {__version__}: {args.command}")
    return run(args, settings)


if __name__ == "__main__":
    sys.exit(main())
