"""
Trace acceptors of transducers and the redundant product.

The trace DFA of a transducer accepts exactly the pairs (x, T(x)). The
redundant product runs ``Tr(T1) ∩ L`` and ``Tr(T2)`` side by side and
exposes the result twice, once with each side's accepting condition, so
that both halves share every letter type.
"""

import logging

from src.core.automata import complete, nfa_intersection, product_states
from src.core.errors import AutomatonInputError
from src.models.automata import (
    Alphabet,
    Nfa,
    ProductAlphabet,
    RedundantProduct,
    Transducer,
    fresh_name,
)

logger = logging.getLogger(__name__)


def trace_dfa(t: Transducer) -> Nfa:
    """
    Deterministic acceptor of ``{(x, y) : T(x) = y}`` over input/output pairs.

    The states are those of ``t`` plus an explicit rejecting sink; every
    state of ``t`` accepts.
    """
    alphabet = ProductAlphabet.of_pair(t.input_alphabet, t.output_alphabet)
    n = t.size
    sink = n
    names = [*t.states, fresh_name("bot", t.states)]
    table = t.next_table
    labels = t.label_table
    succ = [[0] * (n + 1) for _ in range(len(alphabet))]
    for a in range(len(t.input_alphabet)):
        for b in range(len(t.output_alphabet)):
            rows = succ[alphabet.pair_index(a, b)]
            for q in range(n):
                target = table[q][a]
                rows[q] = 1 << (target if labels[target] == b else sink)
            rows[sink] = 1 << sink
    accepting = (1 << n) - 1
    return Nfa.from_masks(alphabet, names, t.initial_index, accepting, succ)


def lift_lambda(lambda_nfa: Nfa, out: Alphabet) -> Nfa:
    """Read ``lambda_nfa`` over input/output pairs, ignoring the output component."""
    alphabet = ProductAlphabet.of_pair(lambda_nfa.alphabet, out)
    succ = []
    for index in range(len(alphabet)):
        a, _ = alphabet.split(index)
        succ.append([lambda_nfa.successors(a, s) for s in range(lambda_nfa.size)])
    return Nfa.from_masks(
        alphabet, lambda_nfa.states, lambda_nfa.initial_index, lambda_nfa.accepting_mask, succ
    )


def check_compatible(t1: Transducer, t2: Transducer, lambda_nfa: Nfa) -> None:
    """
    Raises:
        AutomatonInputError: If the transducers or the restriction disagree on alphabets
    """
    if t1.input_alphabet != t2.input_alphabet:
        raise AutomatonInputError(
            f"input alphabets differ: {t1.input_alphabet.symbols} vs {t2.input_alphabet.symbols}"
        )
    if t1.output_alphabet != t2.output_alphabet:
        raise AutomatonInputError(
            f"output alphabets differ: {t1.output_alphabet.symbols} vs {t2.output_alphabet.symbols}"
        )
    if lambda_nfa.alphabet != t1.input_alphabet:
        raise AutomatonInputError(
            f"restriction alphabet {lambda_nfa.alphabet.symbols} is not the input alphabet"
        )


def build_redundant_product(t1: Transducer, t2: Transducer, lambda_nfa: Nfa) -> RedundantProduct:
    """
    Build the shared-transition pair (B1, B2).

    Args:
        t1: The simulated transducer
        t2: The simulating transducer
        lambda_nfa: Restricting language over the input alphabet

    Returns:
        B1 accepting ``Tr(t1) ∩ L`` and B2 accepting ``Tr(t2)``, on one state space

    Raises:
        AutomatonInputError: On alphabet mismatch
    """
    check_compatible(t1, t2, lambda_nfa)
    # B2 only keeps the runs of Tr(t2) if the left factor never blocks
    restriction = lift_lambda(complete(lambda_nfa), t1.output_alphabet)
    d1 = nfa_intersection(trace_dfa(t1), restriction)
    d2 = trace_dfa(t2)
    pairs, succ = product_states(d1, d2)
    names = [f"p{i}" for i in range(len(pairs))]
    g1 = 0
    g2 = 0
    for i, (p, q) in enumerate(pairs):
        if d1.accepting_mask >> p & 1:
            g1 |= 1 << i
        if d2.accepting_mask >> q & 1:
            g2 |= 1 << i
    b1 = Nfa.from_masks(d1.alphabet, names, 0, g1, succ)
    b2 = Nfa.from_masks(d1.alphabet, names, 0, g2, succ)
    logger.debug(
        f"Redundant product: |D1|={d1.size}, |D2|={d2.size}, reachable pairs={len(pairs)}"
    )
    return RedundantProduct(b1=b1, b2=b2)
