"""
``roundsim equiv``: round equivalence at a fixed k, or for some k up to a bound.
"""

import argparse
import time

from src.cli.commands.common import (
    add_check_options,
    add_pair_arguments,
    load_pair,
    output_options,
    positive_int,
)
from src.cli.dependencies import get_orchestrator, get_report_generator
from src.config.settings import get_settings
from src.models.report import Report


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "equiv", parents=[output_options()], help="Are t1 and t2 round equivalent?"
    )
    add_pair_arguments(parser)
    mode = parser.add_mutually_exclusive_group(required=True)
    mode.add_argument("-k", "--k", type=positive_int, help="Round length")
    mode.add_argument(
        "--existential", action="store_true", help="Search for some k up to --max-k"
    )
    parser.add_argument("--max-k", type=positive_int, default=None, help="Search bound")
    add_check_options(parser)
    parser.set_defaults(handler=run)


async def run(args: argparse.Namespace, command: list[str]) -> Report:
    started = time.perf_counter()
    t1, t2, lam = load_pair(args)
    orchestrator = get_orchestrator()
    generator = get_report_generator()
    if args.existential:
        k_max = args.max_k or get_settings().max_k
        verdict = await orchestrator.existential_equivalence(t1, t2, lam, k_max)
        return generator.existential_equivalence_report(command, started, verdict)
    equivalence = await orchestrator.equivalence(t1, t2, lam, args.k)
    return generator.equivalence_report(command, started, equivalence)
