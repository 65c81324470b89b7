"""
Process permutation models for roundsim

Processes are numbered 0..m-1. A letter of the process alphabet is a set of
processes written in canonical form: sorted, comma separated, in braces
(``{}``, ``{0}``, ``{0,2}``).
"""

import re
from collections.abc import Iterable
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, ValidationError, field_validator
from sympy.combinatorics import Permutation as SympyPermutation

from src.core.errors import AutomatonInputError
from src.models.automata import Alphabet

_CYCLE = re.compile(r"\(([^()]*)\)")


def subset_name(processes: Iterable[int]) -> str:
    return "{" + ",".join(str(p) for p in sorted(set(processes))) + "}"


def parse_subset(symbol: str, m: int) -> frozenset[int]:
    """Parse ``{0,2}`` into ``frozenset({0, 2})``; every process must be below m."""
    if len(symbol) < 2 or symbol[0] != "{" or symbol[-1] != "}":
        raise AutomatonInputError(f"{symbol!r} is not a process set")
    body = symbol[1:-1].strip()
    if not body:
        return frozenset()
    try:
        processes = frozenset(int(part) for part in body.split(","))
    except ValueError:
        raise AutomatonInputError(f"{symbol!r} is not a process set") from None
    if any(p < 0 or p >= m for p in processes):
        raise AutomatonInputError(f"{symbol!r} names a process outside 0..{m - 1}")
    return processes


class ProcessAlphabet(BaseModel):
    """All 2^m process sets, ordered by their bitmask."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(
            subset_name(p for p in range(self.m) if mask >> p & 1) for mask in range(1 << self.m)
        )

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(symbols=self.symbols)

    def is_alphabet_of(self, alphabet: Alphabet) -> bool:
        return set(alphabet.symbols) == set(self.symbols)


class Permutation(BaseModel):
    """A bijection on processes 0..m-1, stored as its image array."""

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...] = Field(..., min_length=1, description="images[i] is pi(i)")

    _inverse: tuple[int, ...] = PrivateAttr(default=())

    @field_validator("images")
    @classmethod
    def _check_bijection(cls, images: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(images) != list(range(len(images))):
            top = len(images) - 1
            raise AutomatonInputError(f"{list(images)} is not a permutation of 0..{top}")
        return images

    def model_post_init(self, __context: Any) -> None:
        self._inverse = tuple((~self._sympy()).array_form)

    def _sympy(self) -> SympyPermutation:
        return SympyPermutation(list(self.images))

    # =========================================================================
    # Constructors
    # =========================================================================

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(images=tuple(range(m)))

    @classmethod
    def transposition(cls, m: int) -> "Permutation":
        """The swap (0 1)."""
        if m < 2:
            raise AutomatonInputError("a transposition needs at least two processes")
        return cls.from_cycles([[0, 1]], m)

    @classmethod
    def cycle(cls, m: int) -> "Permutation":
        """The rotation (0 1 ... m-1)."""
        return cls.from_cycles([list(range(m))], m)

    @classmethod
    def from_cycles(cls, cycles: list[list[int]], m: int) -> "Permutation":
        """Product of the cycles, the rightmost applied first."""
        result = cls.identity(m)
        for cyc in cycles:
            if any(p < 0 or p >= m for p in cyc) or len(set(cyc)) != len(cyc):
                raise AutomatonInputError(f"bad cycle {cyc} for {m} processes")
            cycle = SympyPermutation([cyc], size=m)
            result = result.compose(cls(images=tuple(cycle.array_form)))
        return result

    @classmethod
    def parse(cls, text: str, m: int) -> "Permutation":
        """Accept cycle notation ``(0 1)(2)`` or a mapping ``1,0,2``."""
        text = text.strip()
        if not text or text in ("()", "id"):
            return cls.identity(m)
        if text.startswith("("):
            if _CYCLE.sub("", text).strip():
                raise AutomatonInputError(f"cannot parse cycle notation {text!r}")
            try:
                cycles = [
                    [int(p) for p in body.replace(",", " ").split()]
                    for body in _CYCLE.findall(text)
                ]
            except ValueError:
                raise AutomatonInputError(f"cannot parse cycle notation {text!r}") from None
            return cls.from_cycles([c for c in cycles if c], m)
        try:
            images = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise AutomatonInputError(f"cannot parse permutation {text!r}") from None
        if len(images) != m:
            raise AutomatonInputError(f"mapping {text!r} does not have {m} entries")
        try:
            return cls(images=images)
        except ValidationError as exc:
            raise AutomatonInputError(f"{text!r} is not a permutation of 0..{m - 1}") from exc

    # =========================================================================
    # Group operations
    # =========================================================================

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, process: int) -> int:
        return self.images[process]

    @property
    def inverse(self) -> "Permutation":
        return Permutation(images=self._inverse)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        if other.m != self.m:
            raise AutomatonInputError("cannot compose permutations of different sizes")
        return Permutation(images=tuple(self.images[i] for i in other.images))

    @property
    def order(self) -> int:
        return int(self._sympy().order())

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(self.m))

    def map_set(self, processes: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[p] for p in processes)

    @property
    def cycle_notation(self) -> str:
        cycles = [c for c in self._sympy().full_cyclic_form if len(c) > 1]
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.cycle_notation
