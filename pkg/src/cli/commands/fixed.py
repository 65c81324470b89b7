"""
``roundsim fixed``: round simulation at one round length.
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
from src.core.oracles import oracle_fixed_simulation
from src.models.oracle import OracleBudget
from src.models.report import Report


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "fixed", parents=[output_options()], help="Is t1 k-round simulated by t2?"
    )
    add_pair_arguments(parser)
    parser.add_argument("-k", "--k", type=positive_int, required=True, help="Round length")
    parser.add_argument("--oracle", action="store_true", help=argparse.SUPPRESS)
    add_check_options(parser)
    parser.set_defaults(handler=run)


async def run(args: argparse.Namespace, command: list[str]) -> Report:
    started = time.perf_counter()
    t1, t2, lam = load_pair(args)
    verdict = await get_orchestrator().simulation(t1, t2, lam, args.k)
    report = get_report_generator().simulation_report(command, started, verdict)
    if args.oracle:
        settings = get_settings()
        budget = OracleBudget(
            max_rounds=settings.oracle_max_rounds,
            max_word_length=settings.oracle_max_word_length,
            max_enumerations=settings.oracle_max_enumerations,
        )
        oracle = oracle_fixed_simulation(t1, t2, lam, args.k, budget)
        report.verdicts["oracle"] = oracle.model_dump(mode="json")
        agreement = "agrees" if oracle.holds == verdict.holds else "disagrees"
        report.messages.append(
            f"oracle over {budget.max_rounds} rounds {agreement}: holds={oracle.holds}"
        )
    return report
