"""
Fixed-k round simulation.

T1 is k-round simulated by T2 under L iff the permutation closure of
``Tr(T1) ∩ L`` is contained in the permutation closure of ``Tr(T2)``.
Containment is decided over the Parikh-pair alphabet by a breadth-first
search of the product of the left closure with the subset construction of
the right one.
"""

import logging
from collections import deque

from src.core.automata import universal_nfa
from src.core.errors import AutomatonInputError
from src.core.perm_closure import (
    PairKey,
    ParikhTypeTable,
    PermClosureAutomaton,
    check_quotient_cap,
    perm_closure,
    type_profile,
)
from src.core.trace_product import build_redundant_product
from src.models.automata import Nfa, Transducer
from src.models.profiles import TypeProfile
from src.models.type_matrix import TypeMatrix, iter_bits
from src.models.verdicts import (
    ContainmentStats,
    Counterexample,
    EquivalenceVerdict,
    SimulationVerdict,
)
from src.models.words import RoundSpec, as_round_spec

logger = logging.getLogger(__name__)

Configuration = tuple[int, int]  # (left state, right state set as bitmask)


def _letter_classes(
    a1: PermClosureAutomaton, a2: PermClosureAutomaton, stats: ContainmentStats
) -> list[tuple[PairKey, TypeMatrix, TypeMatrix]]:
    """One representative Parikh pair per distinct (left type, right type), first one wins."""
    classes: dict[tuple[TypeMatrix, TypeMatrix], PairKey] = {}
    for key in a1.quotient_alphabet():
        stats.quotient_letters += 1
        classes.setdefault((a1.transition_type(key), a2.transition_type(key)), key)
    stats.letter_classes = len(classes)
    return [(key, m1, m2) for (m1, m2), key in classes.items()]


def _accepts_nonempty(
    a1: PermClosureAutomaton, letters: list[tuple[PairKey, TypeMatrix, TypeMatrix]]
) -> bool:
    seen = 0
    frontier = 1 << a1.base.initial_index
    while frontier:
        step = 0
        for _, m1, _ in letters:
            step |= m1.post(frontier)
        frontier = step & ~seen
        seen |= step
    return bool(seen & a1.base.accepting_mask)


def _counterexample(
    a1: PermClosureAutomaton,
    parents: dict[Configuration, tuple[Configuration, PairKey, int] | None],
    end: Configuration,
) -> Counterexample:
    steps: list[tuple[int, int, PairKey]] = []
    config = end
    while parents[config] is not None:
        previous, key, _ = parents[config]
        steps.append((previous[0], config[0], key))
        config = previous
    steps.reverse()
    alphabet = a1.alphabet
    x: list[str] = []
    y: list[str] = []
    for source, target, (p, o) in steps:
        for a, b in a1.table.witness(p, o, source, target):
            x.append(alphabet.input.symbols[a])
            y.append(alphabet.output.symbols[b])
    return Counterexample(x=x, y=y, rounds=len(steps))


def quotient_containment(
    a1: PermClosureAutomaton, a2: PermClosureAutomaton, antichain: bool = True
) -> SimulationVerdict:
    """
    Decide ``L(a1) ⊆ L(a2)``.

    Args:
        a1: Left closure automaton
        a2: Right closure automaton, same alphabets and k
        antichain: Skip right-hand subsets that contain an already explored
            subset paired with the same left state

    Returns:
        A holding verdict, or a failing one with the shortest counterexample
        found by breadth-first search, as concrete words

    Raises:
        AutomatonInputError: If the automata disagree on alphabets or k
    """
    if a1.k != a2.k:
        raise AutomatonInputError(f"round lengths differ: {a1.k.k} vs {a2.k.k}")
    if a1.alphabet != a2.alphabet:
        raise AutomatonInputError("closure automata are over different alphabets")
    k = a1.k.k
    stats = ContainmentStats()
    letters = _letter_classes(a1, a2, stats)

    acc1 = a1.base.accepting_mask
    acc2 = a2.base.accepting_mask
    stats.vacuous = not _accepts_nonempty(a1, letters)
    if stats.vacuous:
        logger.warning(f"Left-hand side accepts no non-empty {k}-round word; simulation is vacuous")

    start: Configuration = (a1.base.initial_index, 1 << a2.base.initial_index)
    parents: dict[Configuration, tuple[Configuration, PairKey, int] | None] = {start: None}
    if acc1 >> start[0] & 1 and not start[1] & acc2:
        stats.explored_configurations = 1
        return SimulationVerdict(
            holds=False, k=k, counterexample=Counterexample(x=[], y=[], rounds=0), stats=stats
        )

    bound = a1.base.size << a2.base.size
    explored: dict[int, list[int]] = {start[0]: [start[1]]}
    queue: deque[tuple[Configuration, int]] = deque([(start, 0)])
    found: Configuration | None = None
    while queue and found is None:
        stats.max_frontier = max(stats.max_frontier, len(queue))
        config, depth = queue.popleft()
        assert depth < bound, "search exceeded the product-state bound"
        s1, s2 = config
        for key, m1, m2 in letters:
            targets = m1.rows[s1]
            if not targets:
                continue
            s2_next = m2.post(s2)
            for t1 in iter_bits(targets):
                nxt = (t1, s2_next)
                if nxt in parents:
                    continue
                seen = explored.setdefault(t1, [])
                if antichain and any(m & ~s2_next == 0 for m in seen):
                    stats.pruned_by_antichain += 1
                    continue
                parents[nxt] = (config, key, depth + 1)
                seen.append(s2_next)
                if acc1 >> t1 & 1 and not s2_next & acc2:
                    found = nxt
                    break
                queue.append((nxt, depth + 1))
            if found is not None:
                break

    stats.explored_configurations = len(parents)
    logger.debug(
        f"Containment at k={k}: {stats.letter_classes}/{stats.quotient_letters} letter classes, "
        f"{stats.explored_configurations} configurations, {stats.pruned_by_antichain} pruned"
    )
    if found is None:
        return SimulationVerdict(holds=True, k=k, stats=stats)
    return SimulationVerdict(
        holds=False, k=k, counterexample=_counterexample(a1, parents, found), stats=stats
    )


class RoundSimulationChecker:
    """
    Checks ``t1 <_{k,L} t2`` for any number of round lengths.

    The redundant product and its Parikh type table are built once and
    shared by every k, so profiles at k reuse the table entries of smaller k.
    """

    def __init__(
        self,
        t1: Transducer,
        t2: Transducer,
        lambda_nfa: Nfa | None = None,
        *,
        antichain: bool = True,
        quotient_cap: int | None = None,
    ):
        if lambda_nfa is None:
            lambda_nfa = universal_nfa(t1.input_alphabet)
        self.t1 = t1
        self.t2 = t2
        self.lambda_nfa = lambda_nfa
        self.antichain = antichain
        self.quotient_cap = quotient_cap
        self.product = build_redundant_product(t1, t2, lambda_nfa)
        self.table = ParikhTypeTable(self.product.b1)

    def quotient_size(self, k: int) -> int:
        """
        Raises:
            QuotientCapExceeded: If the quotient alphabet at k is over the cap
        """
        return check_quotient_cap(self.table.alphabet, k, self.quotient_cap)

    def closures(self, k: RoundSpec | int) -> tuple[PermClosureAutomaton, PermClosureAutomaton]:
        return (
            perm_closure(self.product.b1, k, self.table),
            perm_closure(self.product.b2, k, self.table),
        )

    def profile(self, k: RoundSpec | int) -> TypeProfile:
        spec = as_round_spec(k)
        self.quotient_size(spec.k)
        return type_profile(self.product.b1, spec, self.table)

    def check(self, k: RoundSpec | int) -> SimulationVerdict:
        spec = as_round_spec(k)
        self.quotient_size(spec.k)
        a1, a2 = self.closures(spec)
        verdict = quotient_containment(a1, a2, antichain=self.antichain)
        logger.info(
            f"Round simulation at k={spec.k}: {'holds' if verdict.holds else 'fails'} "
            f"({verdict.stats.explored_configurations} configurations)"
        )
        return verdict


def fixed_round_simulates(
    t1: Transducer,
    t2: Transducer,
    lambda_nfa: Nfa | None,
    k: RoundSpec | int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = None,
) -> SimulationVerdict:
    """
    Decide whether t2 k-round simulates t1 on inputs from ``lambda_nfa``.

    A missing restriction means every input word.

    Raises:
        AutomatonInputError: On alphabet mismatch
        QuotientCapExceeded: If the Parikh-pair alphabet at k is over ``quotient_cap``
    """
    checker = RoundSimulationChecker(
        t1, t2, lambda_nfa, antichain=antichain, quotient_cap=quotient_cap
    )
    return checker.check(k)


def fixed_round_equivalent(
    t1: Transducer,
    t2: Transducer,
    lambda_nfa: Nfa | None,
    k: RoundSpec | int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = None,
) -> EquivalenceVerdict:
    """Round simulation in both directions."""
    forward = fixed_round_simulates(
        t1, t2, lambda_nfa, k, antichain=antichain, quotient_cap=quotient_cap
    )
    backward = fixed_round_simulates(
        t2, t1, lambda_nfa, k, antichain=antichain, quotient_cap=quotient_cap
    )
    return EquivalenceVerdict(forward=forward, backward=backward)
