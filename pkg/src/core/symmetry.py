"""
k-round process symmetry of transducers over process sets.

``T^π`` reads ``π⁻¹``-images and emits ``π``-images, so that
``T^π(x) = π(T(π⁻¹(x)))``. T is k-round symmetric with respect to π iff
``T^π`` is k-round simulated by T with no input restriction; symmetry
under every permutation follows from symmetry under a transposition and a
full cycle, which generate the symmetric group.
"""

import logging
from collections.abc import Sequence
from math import prod

from src.core.errors import AutomatonInputError, QuotientCapExceeded
from src.core.existential import existential_search
from src.core.simulation import RoundSimulationChecker, fixed_round_simulates
from src.models.automata import Transducer
from src.models.symmetry import Permutation, ProcessAlphabet, parse_subset, subset_name
from src.models.verdicts import (
    ExistentialOutcome,
    ExistentialSymmetryVerdict,
    ExistentialVerdict,
    GeneratorCheck,
    SimulationVerdict,
    SymmetryVerdict,
)
from src.models.words import RoundSpec, as_round_spec

logger = logging.getLogger(__name__)


def apply_permutation(pi: Permutation, w: Sequence[str]) -> list[str]:
    """Rename the processes of every letter of w."""
    return [subset_name(pi.map_set(parse_subset(symbol, pi.m))) for symbol in w]


def process_count(t: Transducer) -> int:
    """
    Number of processes of a transducer over process sets.

    Raises:
        AutomatonInputError: If either alphabet is not the full set of process sets
    """
    size = len(t.input_alphabet)
    m = size.bit_length() - 1
    if m < 1 or 1 << m != size:
        raise AutomatonInputError(f"input alphabet of {size} symbols is not a powerset alphabet")
    processes = ProcessAlphabet(m=m)
    if not processes.is_alphabet_of(t.input_alphabet):
        raise AutomatonInputError(f"input alphabet is not the set of subsets of 0..{m - 1}")
    if not processes.is_alphabet_of(t.output_alphabet):
        raise AutomatonInputError(f"output alphabet is not the set of subsets of 0..{m - 1}")
    return m


def permute_transducer(t: Transducer, pi: Permutation) -> Transducer:
    """
    Build ``T^π``: same states, ``δ^π(q, σ) = δ(q, π⁻¹(σ))``, ``ℓ^π(q) = π(ℓ(q))``.

    Raises:
        AutomatonInputError: If t is not over process sets of ``pi.m`` processes
    """
    m = process_count(t)
    if m != pi.m:
        raise AutomatonInputError(f"permutation of {pi.m} processes for a {m}-process transducer")
    inverse = pi.inverse
    symbols = t.input_alphabet.symbols
    preimage = dict(zip(symbols, apply_permutation(inverse, symbols)))
    delta = {q: {sigma: t.delta[q][preimage[sigma]] for sigma in symbols} for q in t.states}
    label = {q: apply_permutation(pi, [t.label[q]])[0] for q in t.states}
    return Transducer(
        input_alphabet=t.input_alphabet,
        output_alphabet=t.output_alphabet,
        states=t.states,
        initial=t.initial,
        delta=delta,
        label=label,
    )


def symmetry_generators(m: int) -> list[Permutation]:
    """The transposition (0 1) and the cycle (0 1 ... m-1), without duplicates."""
    generators: list[Permutation] = []
    for pi in (Permutation.transposition(m), Permutation.cycle(m)):
        if pi not in generators:
            generators.append(pi)
    return generators


def is_round_symmetric_wrt(
    t: Transducer,
    pi: Permutation,
    k: RoundSpec | int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = None,
) -> SimulationVerdict:
    """Whether ``T^π`` is k-round simulated by T on all inputs."""
    return fixed_round_simulates(
        permute_transducer(t, pi), t, None, k, antichain=antichain, quotient_cap=quotient_cap
    )


def is_round_symmetric(
    t: Transducer,
    k: RoundSpec | int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = None,
) -> SymmetryVerdict:
    """
    k-round symmetry under every permutation of the processes.

    Raises:
        AutomatonInputError: If t is not over process sets, or has fewer than two processes
    """
    spec = as_round_spec(k)
    m = process_count(t)
    if m < 2:
        raise AutomatonInputError("symmetry needs at least two processes")
    checks = [
        GeneratorCheck(
            permutation=pi.cycle_notation,
            verdict=is_round_symmetric_wrt(
                t, pi, spec, antichain=antichain, quotient_cap=quotient_cap
            ),
        )
        for pi in symmetry_generators(m)
    ]
    verdict = SymmetryVerdict(k=spec.k, m=m, checks=checks)
    logger.info(f"Round symmetry at k={spec.k}: {'holds' if verdict.symmetric else 'fails'}")
    return verdict


def existential_symmetry(
    t: Transducer,
    k_max: int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = 1_000_000,
    verify_reuse: bool = False,
) -> ExistentialSymmetryVerdict:
    """
    First k ≤ k_max at which t is k-round symmetric.

    Each generator is searched on its own. The product of their first k is a
    common round length; smaller common values are found by scanning the
    round lengths below it that no generator is known to fail.
    """
    m = process_count(t)
    if m < 2:
        raise AutomatonInputError("symmetry needs at least two processes")
    generators = symmetry_generators(m)
    per_generator: dict[str, ExistentialVerdict] = {}
    for pi in generators:
        per_generator[pi.cycle_notation] = existential_search(
            permute_transducer(t, pi),
            t,
            None,
            k_max,
            antichain=antichain,
            quotient_cap=quotient_cap,
            verify_reuse=verify_reuse,
        )
    if not all(v.found for v in per_generator.values()):
        return ExistentialSymmetryVerdict(
            outcome=ExistentialOutcome.NOT_FOUND_UP_TO, k_max=k_max, per_generator=per_generator
        )

    candidate = prod(v.k for v in per_generator.values())
    known: dict[str, dict[int, bool]] = {
        name: {e.k: e.answer for e in v.profile_log if e.answer is not None}
        for name, v in per_generator.items()
    }
    checkers: dict[str, RoundSimulationChecker] = {}
    for k in range(1, min(candidate, k_max) + 1):
        if any(answers.get(k) is False for answers in known.values()):
            continue
        if all(_holds_at(t, pi, k, known, checkers, antichain, quotient_cap) for pi in generators):
            certificate = is_round_symmetric(t, k, antichain=antichain)
            return ExistentialSymmetryVerdict(
                outcome=ExistentialOutcome.FOUND,
                k=k,
                k_max=k_max,
                candidate=candidate,
                per_generator=per_generator,
                certificate=certificate,
            )
    return ExistentialSymmetryVerdict(
        outcome=ExistentialOutcome.NOT_FOUND_UP_TO,
        k_max=k_max,
        candidate=candidate,
        per_generator=per_generator,
    )


def _holds_at(
    t: Transducer,
    pi: Permutation,
    k: int,
    known: dict[str, dict[int, bool]],
    checkers: dict[str, RoundSimulationChecker],
    antichain: bool,
    quotient_cap: int | None,
) -> bool:
    name = pi.cycle_notation
    answers = known[name]
    if k not in answers:
        checker = checkers.get(name)
        if checker is None:
            checker = RoundSimulationChecker(
                permute_transducer(t, pi), t, None, antichain=antichain, quotient_cap=quotient_cap
            )
            checkers[name] = checker
        try:
            answers[k] = checker.check(k).holds
        except QuotientCapExceeded as exc:
            logger.warning(f"Generator {name} at k={k} skipped: {exc}")
            return False
    return answers[k]
