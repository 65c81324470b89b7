"""
Round and Parikh models for roundsim
"""

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from src.core.errors import AutomatonInputError
from src.models.automata import Alphabet


class RoundSpec(BaseModel):
    """Round length k; a k-round word has length k*R for some R >= 0."""

    model_config = ConfigDict(frozen=True)

    k: PositiveInt = Field(..., description="Length of each round")

    def rounds_in(self, length: int) -> int | None:
        """Number of rounds of a word of this length, or None if k does not divide it."""
        if length % self.k:
            return None
        return length // self.k


def as_round_spec(k: "RoundSpec | int") -> RoundSpec:
    return k if isinstance(k, RoundSpec) else RoundSpec(k=k)


class ParikhVector(BaseModel):
    """Letter counts of a word over a fixed alphabet."""

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    counts: tuple[int, ...]

    @model_validator(mode="after")
    def _check_counts(self) -> "ParikhVector":
        if len(self.counts) != len(self.alphabet):
            raise AutomatonInputError(
                f"{len(self.counts)} counts for an alphabet of {len(self.alphabet)} symbols"
            )
        if any(c < 0 for c in self.counts):
            raise AutomatonInputError("Parikh counts must be non-negative")
        return self

    @property
    def norm(self) -> int:
        return sum(self.counts)

    def count(self, symbol: str) -> int:
        return self.counts[self.alphabet.index_of(symbol)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.alphabet.symbols, self.counts))

    def __add__(self, other: "ParikhVector") -> "ParikhVector":
        if self.alphabet != other.alphabet:
            raise AutomatonInputError("cannot add Parikh vectors over different alphabets")
        return ParikhVector(
            alphabet=self.alphabet,
            counts=tuple(a + b for a, b in zip(self.counts, other.counts)),
        )


class ParikhPair(BaseModel):
    """A letter of the quotient alphabet: input and output counts of one round."""

    model_config = ConfigDict(frozen=True)

    input: ParikhVector
    output: ParikhVector

    @model_validator(mode="after")
    def _check_norms(self) -> "ParikhPair":
        if self.input.norm != self.output.norm:
            raise AutomatonInputError(
                f"Parikh pair norms differ: {self.input.norm} vs {self.output.norm}"
            )
        return self

    @property
    def norm(self) -> int:
        return self.input.norm

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.input.counts, self.output.counts
