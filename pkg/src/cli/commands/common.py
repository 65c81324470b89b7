"""
Shared argument helpers for the sub-commands.
"""

import argparse

from src.core.automata import universal_nfa
from src.formats.automata_text import load_nfa, load_transducer
from src.models.automata import Nfa, Transducer


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def add_check_options(parser: argparse.ArgumentParser) -> None:
    """Flags every checking command accepts."""
    parser.add_argument(
        "--quotient-cap", type=positive_int, default=None, help="Largest Parikh-pair alphabet"
    )
    parser.add_argument(
        "--no-antichain", action="store_true", help="Disable antichain pruning in containment"
    )


def add_pair_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("t1", help="Transducer file of the simulated side")
    parser.add_argument("t2", help="Transducer file of the simulating side")
    parser.add_argument(
        "--lambda",
        dest="lambda_path",
        default=None,
        help="Acceptor restricting the inputs (default: every input word)",
    )


def load_pair(args: argparse.Namespace) -> tuple[Transducer, Transducer, Nfa]:
    """
    Load t1, t2 and the restriction named by the arguments.

    Raises:
        ParseError: If a file cannot be read or parsed
    """
    t1 = load_transducer(args.t1)
    t2 = load_transducer(args.t2)
    if args.lambda_path is None:
        return t1, t2, universal_nfa(t1.input_alphabet)
    return t1, t2, load_nfa(args.lambda_path)


def output_options() -> argparse.ArgumentParser:
    """Parent parser with the output flags shared by every command."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--json", action="store_true", help="Print the report as JSON")
    parent.add_argument("--debug", action="store_true", help="Log at DEBUG level")
    return parent
