"""
Bounded existential round simulation.

Searches k = 1..k_max for the first round length at which a simulation
holds. When the type profile of the left acceptor at k equals the profile
at an earlier k', the two containment problems are the same problem over
the same letter types, and the earlier answer is reused.
"""

import hashlib
import logging
import time
from dataclasses import dataclass
from math import lcm

from src.core.errors import QuotientCapExceeded, ReuseMismatchError
from src.core.simulation import (
    RoundSimulationChecker,
    fixed_round_equivalent,
    fixed_round_simulates,
)
from src.models.automata import Nfa, Transducer
from src.models.profiles import TypeProfile
from src.models.verdicts import (
    ExistentialEquivalenceVerdict,
    ExistentialOutcome,
    ExistentialVerdict,
    ProfileLogEntry,
    ProfileSource,
)

logger = logging.getLogger(__name__)


def profile_fingerprint(profile: TypeProfile) -> str:
    """SHA-256 of the sorted canonical bytes of the profile's matrices."""
    return hashlib.sha256(profile.canonical_bytes()).hexdigest()


@dataclass
class _SeenProfile:
    k: int
    fingerprint: str
    profile: TypeProfile
    answer: bool


class ExistentialSearch:
    """
    Ascending sweep over round lengths for one (t1, t2, L) triple.

    Entries are committed to the log strictly in ascending k, so the first
    holding k is the one reported.
    """

    def __init__(
        self,
        t1: Transducer,
        t2: Transducer,
        lambda_nfa: Nfa | None = None,
        *,
        antichain: bool = True,
        quotient_cap: int | None = 1_000_000,
        verify_reuse: bool = False,
    ):
        self.checker = RoundSimulationChecker(
            t1, t2, lambda_nfa, antichain=antichain, quotient_cap=quotient_cap
        )
        self.verify_reuse = verify_reuse
        self.log: list[ProfileLogEntry] = []
        self._seen: list[_SeenProfile] = []

    def _lookup(self, fingerprint: str, profile: TypeProfile) -> _SeenProfile | None:
        for seen in self._seen:
            if seen.fingerprint == fingerprint and seen.profile.same_types(profile):
                return seen
        return None

    def step(self, k: int) -> ProfileLogEntry:
        """Decide the simulation at k, reusing an earlier answer when the profile recurs."""
        started = time.perf_counter()
        try:
            size = self.checker.quotient_size(k)
        except QuotientCapExceeded as exc:
            logger.warning(f"k={k}: skipped, {exc}")
            entry = ProfileLogEntry(k=k, source=ProfileSource.SKIPPED, quotient_letters=exc.size)
            self.log.append(entry)
            return entry

        profile = self.checker.profile(k)
        fingerprint = profile_fingerprint(profile)
        match = self._lookup(fingerprint, profile)
        verified: bool | None = None
        if match is not None:
            answer = match.answer
            source = ProfileSource.REUSED
            if self.verify_reuse:
                recomputed = self.checker.check(k).holds
                if recomputed != answer:
                    raise ReuseMismatchError(
                        f"k={k}: reused answer {answer} from k={match.k}, recomputed {recomputed}"
                    )
                verified = True
        else:
            answer = self.checker.check(k).holds
            source = ProfileSource.COMPUTED
            self._seen.append(_SeenProfile(k, fingerprint, profile, answer))

        entry = ProfileLogEntry(
            k=k,
            source=source,
            fingerprint=fingerprint,
            profile_size=len(profile),
            quotient_letters=size,
            answer=answer,
            reused_from=match.k if match is not None else None,
            reuse_verified=verified,
            elapsed_ms=(time.perf_counter() - started) * 1000,
        )
        logger.info(
            f"k={k}: profile size {entry.profile_size}, {source.value}"
            f"{f' from k={entry.reused_from}' if entry.reused_from else ''}, "
            f"answer {answer}, {entry.elapsed_ms:.1f} ms"
        )
        self.log.append(entry)
        return entry

    def run(self, k_max: int) -> ExistentialVerdict:
        """
        Search k = 1..k_max.

        Returns:
            found(k) certified by an independent fixed check, or not-found-up-to(k_max)
        """
        if k_max < 1:
            raise ValueError("k_max must be at least 1")
        for k in range(1, k_max + 1):
            entry = self.step(k)
            if entry.answer:
                certificate = fixed_round_simulates(
                    self.checker.t1,
                    self.checker.t2,
                    self.checker.lambda_nfa,
                    k,
                    antichain=self.checker.antichain,
                )
                if not certificate.holds:
                    raise ReuseMismatchError(f"k={k}: search answer not confirmed by a fixed check")
                return ExistentialVerdict(
                    outcome=ExistentialOutcome.FOUND,
                    k=k,
                    k_max=k_max,
                    profile_log=list(self.log),
                    certificate=certificate,
                    multiples_hold=True,
                )
        return ExistentialVerdict(
            outcome=ExistentialOutcome.NOT_FOUND_UP_TO, k_max=k_max, profile_log=list(self.log)
        )


def existential_search(
    t1: Transducer,
    t2: Transducer,
    lambda_nfa: Nfa | None,
    k_max: int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = 1_000_000,
    verify_reuse: bool = False,
) -> ExistentialVerdict:
    """
    First k ≤ k_max at which t2 k-round simulates t1 on inputs from ``lambda_nfa``.

    Raises:
        AutomatonInputError: On alphabet mismatch
    """
    search = ExistentialSearch(
        t1,
        t2,
        lambda_nfa,
        antichain=antichain,
        quotient_cap=quotient_cap,
        verify_reuse=verify_reuse,
    )
    return search.run(k_max)


def existential_equivalence(
    t1: Transducer,
    t2: Transducer,
    lambda_nfa: Nfa | None,
    k_max: int,
    *,
    antichain: bool = True,
    quotient_cap: int | None = 1_000_000,
    verify_reuse: bool = False,
) -> ExistentialEquivalenceVerdict:
    """
    Search both directions; if both succeed, certify equivalence at the lcm of the two k.

    Simulation at k carries over to every multiple of k by grouping rounds,
    so the lcm is a common round length for both directions.
    """
    options = dict(antichain=antichain, quotient_cap=quotient_cap, verify_reuse=verify_reuse)
    forward = existential_search(t1, t2, lambda_nfa, k_max, **options)
    backward = existential_search(t2, t1, lambda_nfa, k_max, **options)
    if not (forward.found and backward.found):
        return ExistentialEquivalenceVerdict(forward=forward, backward=backward)
    k = lcm(forward.k, backward.k)
    try:
        certificate = fixed_round_equivalent(
            t1, t2, lambda_nfa, k, antichain=antichain, quotient_cap=quotient_cap
        )
    except QuotientCapExceeded as exc:
        logger.warning(f"Equivalence at k={k} not certified: {exc}")
        return ExistentialEquivalenceVerdict(
            forward=forward, backward=backward, k=k, note=f"uncertified: {exc}"
        )
    return ExistentialEquivalenceVerdict(
        forward=forward, backward=backward, k=k, certificate=certificate
    )
