"""
Automata primitives.

Runs of transducers, letter and word types of acceptors, membership and
product intersection.
"""

import logging
from collections import deque
from collections.abc import Sequence

from src.core.errors import AutomatonInputError
from src.models.automata import Alphabet, Nfa, Transducer, fresh_name
from src.models.type_matrix import TypeMatrix, iter_bits

logger = logging.getLogger(__name__)


def run_transducer(t: Transducer, x: Sequence[str]) -> list[str]:
    """
    Output of ``t`` on ``x``.

    Args:
        t: The transducer
        x: Input word over the input alphabet

    Returns:
        The labels of the states entered along the run; same length as x

    Raises:
        AutomatonInputError: If x contains a symbol outside the input alphabet
    """
    symbols = t.input_alphabet.encode(x)
    table = t.next_table
    labels = t.label_table
    out = t.output_alphabet.symbols
    state = t.initial_index
    result = []
    for sym in symbols:
        state = table[state][sym]
        result.append(out[labels[state]])
    return result


def letter_type(n: Nfa, symbol: str) -> TypeMatrix:
    return n.letter_types[n.alphabet.index_of(symbol)]


def word_type(n: Nfa, w: Sequence[str]) -> TypeMatrix:
    """Boolean product of the letter types of ``w``, left to right."""
    result = TypeMatrix.identity(n.size)
    types = n.letter_types
    for sym in n.alphabet.encode(w):
        result = result @ types[sym]
    return result


def run_indices(n: Nfa, word: Sequence[int]) -> int:
    """Set of states (bitmask) reached from the initial state on an index word."""
    current = 1 << n.initial_index
    types = n.letter_types
    for sym in word:
        current = types[sym].post(current)
        if not current:
            break
    return current


def nfa_membership(n: Nfa, w: Sequence[str]) -> bool:
    return bool(run_indices(n, n.alphabet.encode(w)) & n.accepting_mask)


def universal_nfa(alphabet: Alphabet, state: str = "u") -> Nfa:
    """One accepting state with a self-loop on every symbol."""
    return Nfa(
        alphabet=alphabet,
        states=(state,),
        initial=state,
        accepting=frozenset({state}),
        transitions=tuple((state, symbol, state) for symbol in alphabet.symbols),
    )


def empty_nfa(alphabet: Alphabet, state: str = "e") -> Nfa:
    return Nfa(alphabet=alphabet, states=(state,), initial=state)


def product_states(a: Nfa, b: Nfa) -> tuple[list[tuple[int, int]], list[list[int]]]:
    """
    Reachable pairs of the synchronous product, in BFS order from the initial pair.

    Returns:
        The pairs, and ``succ[symbol][pair]`` as bitmasks over pair positions
    """
    start = (a.initial_index, b.initial_index)
    order = [start]
    position = {start: 0}
    edges: list[list[list[int]]] = [[] for _ in a.alphabet.symbols]
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        for sym in range(len(a.alphabet)):
            targets = []
            row_a = a.successors(sym, p)
            row_b = b.successors(sym, q)
            for ta in iter_bits(row_a):
                for tb in iter_bits(row_b):
                    target = (ta, tb)
                    if target not in position:
                        position[target] = len(order)
                        order.append(target)
                        queue.append(target)
                    targets.append(position[target])
            edges[sym].append(targets)
    succ = [[sum(1 << t for t in targets) for targets in per_state] for per_state in edges]
    return order, succ


def nfa_intersection(a: Nfa, b: Nfa) -> Nfa:
    """
    Product acceptor for ``L(a) ∩ L(b)`` restricted to reachable pairs.

    Raises:
        AutomatonInputError: If the alphabets differ
    """
    if a.alphabet != b.alphabet:
        raise AutomatonInputError("cannot intersect acceptors over different alphabets")
    pairs, succ = product_states(a, b)
    names = [f"({a.states[p]},{b.states[q]})" for p, q in pairs]
    if len(set(names)) != len(names):
        names = [f"p{i}" for i in range(len(pairs))]
    accepting = 0
    for i, (p, q) in enumerate(pairs):
        if a.accepting_mask >> p & 1 and b.accepting_mask >> q & 1:
            accepting |= 1 << i
    logger.debug(f"Intersection of {a.size}x{b.size} states kept {len(pairs)} reachable pairs")
    return Nfa.from_masks(a.alphabet, names, 0, accepting, succ)



def complete(n: Nfa) -> Nfa:
    """Send every missing transition to a fresh rejecting sink; ``n`` itself if none is missing."""
    size = n.size
    missing = any(
        not n.successors(sym, q) for sym in range(len(n.alphabet)) for q in range(size)
    )
    if not missing:
        return n
    sink = size
    succ = [
        [n.successors(sym, q) or 1 << sink for q in range(size)] + [1 << sink]
        for sym in range(len(n.alphabet))
    ]
    names = [*n.states, fresh_name("sink", n.states)]
    return Nfa.from_masks(n.alphabet, names, n.initial_index, n.accepting_mask, succ)
