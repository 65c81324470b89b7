"""
``roundsim symmetry``: process symmetry of a transducer over process sets.
"""

import argparse
import time

from src.cli.commands.common import add_check_options, output_options, positive_int
from src.cli.dependencies import get_orchestrator, get_report_generator
from src.config.settings import get_settings
from src.core.errors import AutomatonInputError
from src.core.symmetry import process_count
from src.formats.automata_text import load_transducer
from src.models.report import Report
from src.models.symmetry import Permutation


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "symmetry",
        parents=[output_options()],
        help="Is t round symmetric under process renaming?",
    )
    parser.add_argument("t", help="Transducer file over process sets {..}")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("-k", "--k", type=positive_int, help="Check at this round length")
    mode.add_argument("--max-k", type=positive_int, help="Search k = 1..max-k")
    parser.add_argument(
        "--perm",
        action="append",
        default=None,
        help="Permutation to check, e.g. '(0 1 2)' or '1,0,2'; repeatable, needs --k",
    )
    parser.add_argument(
        "--allow-large-m", action="store_true", help="Allow more processes than configured"
    )
    add_check_options(parser)
    parser.set_defaults(handler=run)


async def run(args: argparse.Namespace, command: list[str]) -> Report:
    started = time.perf_counter()
    settings = get_settings()
    t = load_transducer(args.t)
    m = process_count(t)
    if m > settings.max_processes and not args.allow_large_m:
        raise AutomatonInputError(
            f"{m} processes is over the limit of {settings.max_processes}; pass --allow-large-m"
        )
    orchestrator = get_orchestrator()
    generator = get_report_generator()
    if args.k is not None:
        perms = [Permutation.parse(text, m) for text in args.perm] if args.perm else None
        verdict = await orchestrator.symmetry(t, args.k, perms)
        return generator.symmetry_report(command, started, verdict)
    if args.perm:
        raise AutomatonInputError("--perm needs a fixed --k")
    search = await orchestrator.existential_symmetry(t, args.max_k or settings.max_k)
    return generator.existential_symmetry_report(command, started, search)
