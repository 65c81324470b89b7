"""
Main CLI router for roundsim

Builds the argument parser from the sub-command modules, runs the selected
command and prints its report. Exit codes: 0 when the property holds or a
k is found, 1 when it is refuted or not found up to the bound, 2 on usage
or input errors.
"""

import argparse
import asyncio
import logging
import sys
import time
from collections.abc import Sequence

from src.cli import dependencies
from src.cli.commands import equiv, existential, fixed, gen, symmetry
from src.config.settings import get_settings
from src.core.errors import (
    AutomatonInputError,
    BudgetExceeded,
    QuotientCapExceeded,
    ReuseMismatchError,
)
from src.formats.report_text import render_json, render_text

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.app_name,
        description="Round simulation, equivalence and process symmetry of transducers",
    )
    parser.add_argument("--version", action="version", version=settings.app_version)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (fixed, equiv, existential, symmetry, gen):
        module.register(subparsers)
    return parser


def configure_logging(debug: bool = False) -> None:
    """Log to stderr; stdout carries only the report."""
    settings = get_settings()
    level = logging.DEBUG if debug else getattr(logging, settings.effective_log_level, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.debug)

    dependencies.configure_orchestrator(
        antichain=False if getattr(args, "no_antichain", False) else None,
        quotient_cap=getattr(args, "quotient_cap", None),
        verify_reuse=True if getattr(args, "verify_reuse", False) else None,
    )
    started = time.perf_counter()
    try:
        report = asyncio.run(args.handler(args, argv))
    except (AutomatonInputError, QuotientCapExceeded, BudgetExceeded, ReuseMismatchError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        report = dependencies.get_report_generator().error_report(argv, started, exc)

    print(render_json(report) if args.json else render_text(report), end="")
    return int(report.exit_code)


if __name__ == "__main__":
    sys.exit(main())
