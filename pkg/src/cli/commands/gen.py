"""
``roundsim gen``: write benchmark bundles to a directory.
"""

import argparse
import time

from src.cli.commands.common import output_options, positive_int
from src.cli.dependencies import get_report_generator
from src.config.settings import get_settings
from src.core.errors import AutomatonInputError
from src.core.generators import (
    gen_example_asymmetric,
    gen_prime_family,
    gen_round_robin_bundle,
    gen_universality_reduction,
)
from src.formats.automata_text import load_nfa
from src.formats.bundles import write_bundle
from src.models.instances import InstanceBundle
from src.models.report import Report

EXAMPLES = {"asymmetric": gen_example_asymmetric}


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="Generate an instance bundle")
    families = parser.add_subparsers(dest="family", required=True)

    output = output_options()
    rr = families.add_parser("roundrobin", parents=[output], help="Two round-robin schedulers")
    rr.add_argument("--m", type=positive_int, required=True, help="Number of processes")
    rr.add_argument("--start", type=int, default=0, help="First process of t1")
    rr.add_argument("--other", type=int, default=1, help="First process of t2")

    primes = families.add_parser(
        "primes", parents=[output], help="Identity cycle against prime-length spokes"
    )
    primes.add_argument("--m", type=positive_int, required=True, help="Number of primes")

    uni = families.add_parser(
        "universality", parents=[output], help="Reduction from acceptor universality"
    )
    uni.add_argument("--nfa", required=True, help="Acceptor file over {0, 1}")
    uni.add_argument("--padded", action="store_true", help="Variant for some round length")

    example = families.add_parser("example", parents=[output], help="Named fixture")
    example.add_argument("--name", choices=sorted(EXAMPLES), default="asymmetric")

    for sub in (rr, primes, uni, example):
        sub.add_argument("--out", required=True, help="Output directory")
        sub.set_defaults(handler=run)


def build_bundle(args: argparse.Namespace) -> InstanceBundle:
    settings = get_settings()
    if args.family == "roundrobin":
        if args.m > settings.max_processes:
            raise AutomatonInputError(f"{args.m} processes is over {settings.max_processes}")
        return gen_round_robin_bundle(args.m, args.start, args.other)
    if args.family == "primes":
        return gen_prime_family(args.m, max_m=settings.max_prime_count)
    if args.family == "universality":
        return gen_universality_reduction(
            load_nfa(args.nfa), padded=args.padded, cutoff=settings.universality_cutoff
        )
    return EXAMPLES[args.name]()


async def run(args: argparse.Namespace, command: list[str]) -> Report:
    started = time.perf_counter()
    bundle = build_bundle(args)
    manifest = write_bundle(bundle, args.out, get_settings().app_version)
    return get_report_generator().generation_report(command, started, manifest, str(args.out))
