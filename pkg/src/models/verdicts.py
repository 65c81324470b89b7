"""
Verdict models for roundsim

Results of fixed-k simulation and equivalence checks, of the bounded
existential search, and of process symmetry checks.
"""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from src.core.errors import AutomatonInputError


class Counterexample(BaseModel):
    """An input word in the restricting language and the first transducer's output on it."""

    x: list[str] = Field(..., description="Input word, one symbol per entry")
    y: list[str] = Field(..., description="Output of the simulated transducer on x")
    rounds: int = Field(..., ge=0)


class ContainmentStats(BaseModel):
    """Search statistics of one quotient containment run."""

    quotient_letters: int = 0  # Parikh pairs enumerated
    letter_classes: int = 0  # distinct (type, type) behaviours among them
    explored_configurations: int = 0
    pruned_by_antichain: int = 0
    max_frontier: int = 0
    vacuous: bool = False  # the left-hand side accepts no non-empty word


class SimulationVerdict(BaseModel):
    """Outcome of T1 <_{k,L} T2 at a fixed round length."""

    holds: bool
    k: int = Field(..., ge=1)
    counterexample: Counterexample | None = None
    stats: ContainmentStats = Field(default_factory=ContainmentStats)

    @model_validator(mode="after")
    def _check_witness(self) -> "SimulationVerdict":
        if self.holds:
            if self.counterexample is not None:
                raise AutomatonInputError("a holding verdict carries no counterexample")
            return self
        cex = self.counterexample
        if cex is None:
            raise AutomatonInputError("a failing verdict needs a counterexample")
        if len(cex.x) != len(cex.y) or len(cex.x) % self.k:
            raise AutomatonInputError("counterexample must be a k-round word pair")
        return self


class EquivalenceVerdict(BaseModel):
    """Both directions of a fixed-k round equivalence check."""

    forward: SimulationVerdict  # T1 simulated by T2
    backward: SimulationVerdict  # T2 simulated by T1

    @property
    def k(self) -> int:
        return self.forward.k

    @property
    def equivalent(self) -> bool:
        return self.forward.holds and self.backward.holds


# =============================================================================
# Existential search
# =============================================================================


class ExistentialOutcome(str, Enum):
    """Result kind of a bounded search over round lengths."""

    FOUND = "found"
    NOT_FOUND_UP_TO = "not_found_up_to"  # bounded negative, never a universal "no"


class ProfileSource(str, Enum):
    """Where the containment answer for one k came from."""

    COMPUTED = "computed"
    REUSED = "reused"
    SKIPPED = "skipped"  # quotient alphabet over the cap


class ProfileLogEntry(BaseModel):
    """One line of the existential search log."""

    k: int
    source: ProfileSource
    fingerprint: str | None = None
    profile_size: int | None = None
    quotient_letters: int
    answer: bool | None = None
    reused_from: int | None = None
    reuse_verified: bool | None = None  # set when the reused answer was recomputed
    elapsed_ms: float = 0.0


class ExistentialVerdict(BaseModel):
    """Result of searching k = 1..k_max for a round length at which a simulation holds."""

    outcome: ExistentialOutcome
    k: int | None = Field(default=None, description="The first k found")
    k_max: int
    profile_log: list[ProfileLogEntry] = Field(default_factory=list)
    certificate: SimulationVerdict | None = None
    multiples_hold: bool = False  # a found k also holds at every multiple of k

    @model_validator(mode="after")
    def _check_outcome(self) -> "ExistentialVerdict":
        if self.outcome is ExistentialOutcome.FOUND:
            if self.k is None or self.certificate is None or not self.certificate.holds:
                raise AutomatonInputError("a found verdict needs a holding certificate")
        elif self.k is not None:
            raise AutomatonInputError("a bounded-negative verdict has no k")
        known = {entry.k: entry for entry in self.profile_log}
        for entry in self.profile_log:
            if entry.source is ProfileSource.REUSED:
                origin = known.get(entry.reused_from) if entry.reused_from is not None else None
                if origin is None or origin.k >= entry.k or origin.fingerprint != entry.fingerprint:
                    raise AutomatonInputError(
                        f"reuse at k={entry.k} has no matching earlier profile"
                    )
        return self

    @property
    def found(self) -> bool:
        return self.outcome is ExistentialOutcome.FOUND

    @property
    def reuse_count(self) -> int:
        return sum(1 for entry in self.profile_log if entry.source is ProfileSource.REUSED)

    @property
    def skipped(self) -> list[int]:
        return [entry.k for entry in self.profile_log if entry.source is ProfileSource.SKIPPED]


class ExistentialEquivalenceVerdict(BaseModel):
    """Existential search in both directions, joined at the least common multiple."""

    forward: ExistentialVerdict
    backward: ExistentialVerdict
    k: int | None = None
    certificate: EquivalenceVerdict | None = None
    note: str = ""

    @property
    def equivalent(self) -> bool:
        return self.certificate is not None and self.certificate.equivalent


# =============================================================================
# Symmetry
# =============================================================================


class GeneratorCheck(BaseModel):
    """Round symmetry with respect to one permutation."""

    permutation: str = Field(..., description="Cycle notation")
    verdict: SimulationVerdict


class SymmetryVerdict(BaseModel):
    """k-round symmetry under the full symmetric group, checked on its generators."""

    k: int
    m: int
    checks: list[GeneratorCheck]

    @property
    def symmetric(self) -> bool:
        return all(check.verdict.holds for check in self.checks)


class ExistentialSymmetryVerdict(BaseModel):
    """Bounded search for a k at which every generator check holds."""

    outcome: ExistentialOutcome
    k: int | None = None
    k_max: int
    candidate: int | None = Field(default=None, description="Product of the per-generator k")
    per_generator: dict[str, ExistentialVerdict] = Field(default_factory=dict)
    certificate: SymmetryVerdict | None = None

    @property
    def found(self) -> bool:
        return self.outcome is ExistentialOutcome.FOUND
