"""
Brute-force reference checks.

Each oracle follows a definition literally, by enumeration, and uses only
transducer runs, acceptor membership and word-level round equivalence.
Budgets are hard limits: running past one raises BudgetExceeded instead of
returning a truncated answer.
"""

import logging
from collections import deque
from collections.abc import Iterator, Sequence
from itertools import product

from sympy.utilities.iterables import multiset_permutations

from src.core.automata import nfa_membership, run_transducer
from src.core.errors import AutomatonInputError, BudgetExceeded
from src.core.round_words import round_equivalent, rounds
from src.models.automata import Nfa, ProductAlphabet, Transducer
from src.models.oracle import OracleBudget, OracleVerdict
from src.models.words import RoundSpec, as_round_spec

logger = logging.getLogger(__name__)


class _Counter:
    """Shared enumeration counter of one oracle call."""

    def __init__(self, limit: int):
        self.limit = limit
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise BudgetExceeded("enumerations", self.limit)


def round_rewritings(w: Sequence[str], k: RoundSpec | int) -> Iterator[list[str]]:
    """Every word round-equivalent to w, each distinct rearrangement once."""
    blocks = [list(multiset_permutations(block)) for block in rounds(w, k)]
    for choice in product(*blocks):
        yield [symbol for block in choice for symbol in block]


def oracle_fixed_simulation(
    t1: Transducer,
    t2: Transducer,
    lambda_nfa: Nfa | None,
    k: RoundSpec | int,
    budget: OracleBudget | None = None,
) -> OracleVerdict:
    """
    Check round simulation on every input of at most ``budget.max_rounds`` rounds.

    For each such x in the restriction, look for x' round-equivalent to x with
    ``t1(x)`` round-equivalent to ``t2(x')``.

    Raises:
        BudgetExceeded: If the longest input is over ``max_word_length`` or
            the number of runs is over ``max_enumerations``
        AutomatonInputError: On alphabet mismatch
    """
    spec = as_round_spec(k)
    budget = budget or OracleBudget()
    if t1.input_alphabet != t2.input_alphabet or t1.output_alphabet != t2.output_alphabet:
        raise AutomatonInputError("transducers have different alphabets")
    if lambda_nfa is not None and lambda_nfa.alphabet != t1.input_alphabet:
        raise AutomatonInputError("restricting language is not over the input alphabet")
    if budget.max_rounds * spec.k > budget.max_word_length:
        raise BudgetExceeded("word length", budget.max_word_length)

    counter = _Counter(budget.max_enumerations)
    checked = 0
    symbols = t1.input_alphabet.symbols
    for r in range(budget.max_rounds + 1):
        for x in product(symbols, repeat=r * spec.k):
            counter.tick()
            if lambda_nfa is not None and not nfa_membership(lambda_nfa, x):
                continue
            checked += 1
            y = run_transducer(t1, x)
            matched = False
            for x_prime in round_rewritings(x, spec):
                counter.tick()
                if round_equivalent(y, run_transducer(t2, x_prime), spec):
                    matched = True
                    break
            if not matched:
                logger.debug(f"Oracle refutes at k={spec.k} on x={' '.join(x)}")
                return OracleVerdict(
                    holds=False,
                    k=spec.k,
                    witness=list(x),
                    inputs_checked=checked,
                    enumerations=counter.count,
                )
    return OracleVerdict(holds=True, k=spec.k, inputs_checked=checked, enumerations=counter.count)


def oracle_perm_membership(
    n: Nfa,
    k: RoundSpec | int,
    x: Sequence[str],
    y: Sequence[str],
    budget: OracleBudget | None = None,
) -> bool:
    """
    Whether some (x', y') round-equivalent to (x, y) is accepted by n.

    n reads pairs, so its alphabet must be a product alphabet. A pair that is
    not a k-round word pair is never accepted.

    Raises:
        AutomatonInputError: If n is not over a product alphabet
        BudgetExceeded: If more than ``max_enumerations`` pairs are tried
    """
    spec = as_round_spec(k)
    budget = budget or OracleBudget()
    alphabet = n.alphabet
    if not isinstance(alphabet, ProductAlphabet):
        raise AutomatonInputError("acceptor does not read input/output pairs")
    if len(x) != len(y) or spec.rounds_in(len(x)) is None:
        return False
    counter = _Counter(budget.max_enumerations)
    outputs = list(round_rewritings(y, spec))
    for x_prime in round_rewritings(x, spec):
        for y_prime in outputs:
            counter.tick()
            word = alphabet.decode(alphabet.encode_pair(x_prime, y_prime))
            if nfa_membership(n, word):
                return True
    return False


def oracle_nfa_universality(n: Nfa, cutoff: int = 4096) -> bool:
    """
    Exact universality by exploring the reachable subsets of the subset construction.

    Raises:
        BudgetExceeded: If more than ``cutoff`` subsets are reachable
    """
    types = n.letter_types
    start = 1 << n.initial_index
    seen = {start}
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        if not subset & n.accepting_mask:
            return False
        for matrix in types:
            nxt = matrix.post(subset)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cutoff:
                    raise BudgetExceeded("reachable subsets", cutoff)
                queue.append(nxt)
    return True


def oracle_bounded_universality(n: Nfa, max_length: int) -> bool:
    """Whether n accepts every word of length at most ``max_length``."""
    return all(
        nfa_membership(n, w)
        for length in range(max_length + 1)
        for w in product(n.alphabet.symbols, repeat=length)
    )
