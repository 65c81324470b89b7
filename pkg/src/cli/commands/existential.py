"""
``roundsim existential``: first k up to a bound at which t1 is simulated by t2.
"""

import argparse
import logging
import time
from pathlib import Path

from src.cli.commands.common import (
    add_check_options,
    add_pair_arguments,
    load_pair,
    output_options,
    positive_int,
)
from src.cli.dependencies import get_orchestrator, get_report_generator
from src.config.settings import get_settings
from src.core.perm_closure import dump_profile
from src.models.report import Report
from src.models.verdicts import ProfileSource

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "existential",
        parents=[output_options()],
        help="Search k = 1..max-k for a round length at which t2 simulates t1",
    )
    add_pair_arguments(parser)
    parser.add_argument(
        "--max-k", type=positive_int, default=None, help="Search bound (default from settings)"
    )
    parser.add_argument(
        "--dump-profiles",
        metavar="DIR",
        default=None,
        help="Write the type profile of every computed k to DIR",
    )
    parser.add_argument(
        "--verify-reuse", action="store_true", help="Recompute every reused answer"
    )
    add_check_options(parser)
    parser.set_defaults(handler=run)


async def run(args: argparse.Namespace, command: list[str]) -> Report:
    started = time.perf_counter()
    t1, t2, lam = load_pair(args)
    orchestrator = get_orchestrator()
    k_max = args.max_k or get_settings().max_k
    verdict = await orchestrator.existential(t1, t2, lam, k_max)
    report = get_report_generator().existential_report(command, started, verdict)

    if args.dump_profiles:
        directory = Path(args.dump_profiles)
        directory.mkdir(parents=True, exist_ok=True)
        ks = [e.k for e in verdict.profile_log if e.source is not ProfileSource.SKIPPED]
        profiles = await orchestrator.profiles(t1, t2, lam, ks)
        for k, profile in profiles.items():
            (directory / f"profile-k{k}.txt").write_text(dump_profile(profile), encoding="utf-8")
        logger.info(f"Wrote {len(profiles)} profiles to {directory}")
        report.messages.append(f"profiles written to {directory}")
    return report
