"""
Automata models for roundsim

Alphabets, nondeterministic acceptors and letter-to-letter transducers.
All models are frozen; each one compiles an index-based form of itself
once, at construction, for the algorithms in ``src.core``.
"""

from collections.abc import Iterable, Sequence
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from src.core.errors import AutomatonInputError
from src.models.type_matrix import TypeMatrix


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """Return ``base`` or ``base`` with primes appended, avoiding every name in ``taken``."""
    taken = set(taken)
    name = base
    while name in taken:
        name += "'"
    return name


class Alphabet(BaseModel):
    """Ordered finite set of symbol names."""

    model_config = ConfigDict(frozen=True)

    symbols: tuple[str, ...] = Field(..., min_length=1, description="Symbols in alphabet order")

    _index: dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("symbols")
    @classmethod
    def _check_symbols(cls, symbols: tuple[str, ...]) -> tuple[str, ...]:
        if len(set(symbols)) != len(symbols):
            raise AutomatonInputError(f"duplicate symbols in alphabet {symbols}")
        for symbol in symbols:
            if not symbol or any(ch.isspace() for ch in symbol):
                raise AutomatonInputError(f"invalid symbol name {symbol!r}")
        return symbols

    def model_post_init(self, __context: Any) -> None:
        self._index = {symbol: i for i, symbol in enumerate(self.symbols)}

    @classmethod
    def of(cls, *symbols: str) -> "Alphabet":
        return cls(symbols=symbols)

    def index_of(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AutomatonInputError(f"unknown symbol {symbol!r}") from None

    def encode(self, word: Sequence[str]) -> list[int]:
        """Map a word to symbol indices."""
        return [self.index_of(symbol) for symbol in word]

    def decode(self, indices: Iterable[int]) -> list[str]:
        return [self.symbols[i] for i in indices]

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index


class ProductAlphabet(Alphabet):
    """
    The alphabet of input/output pairs.

    Pair (a, b) sits at index ``index(a) * |output| + index(b)``, i.e. pairs are
    enumerated in lexicographic order. Its symbol names are ``a/b``.
    """

    input: Alphabet
    output: Alphabet

    @model_validator(mode="before")
    @classmethod
    def _derive_symbols(cls, data: Any) -> Any:
        if isinstance(data, dict) and "symbols" not in data:
            sigma_i = data["input"]
            sigma_o = data["output"]
            if isinstance(sigma_i, dict):
                sigma_i = Alphabet(**sigma_i)
            if isinstance(sigma_o, dict):
                sigma_o = Alphabet(**sigma_o)
            data = {
                **data,
                "symbols": tuple(f"{a}/{b}" for a in sigma_i.symbols for b in sigma_o.symbols),
            }
        return data

    @model_validator(mode="after")
    def _check_size(self) -> "ProductAlphabet":
        if len(self.symbols) != len(self.input) * len(self.output):
            raise AutomatonInputError("product alphabet size must be |input|*|output|")
        return self

    @classmethod
    def of_pair(cls, sigma_i: Alphabet, sigma_o: Alphabet) -> "ProductAlphabet":
        return cls(input=sigma_i, output=sigma_o)

    def pair_index(self, a: int, b: int) -> int:
        return a * len(self.output) + b

    def split(self, index: int) -> tuple[int, int]:
        return divmod(index, len(self.output))

    def encode_pair(self, x: Sequence[str], y: Sequence[str]) -> list[int]:
        """Index word of the pair word (x, y); both components must have equal length."""
        if len(x) != len(y):
            raise AutomatonInputError(f"component lengths differ: {len(x)} vs {len(y)}")
        xs = self.input.encode(x)
        ys = self.output.encode(y)
        return [self.pair_index(a, b) for a, b in zip(xs, ys)]


class Nfa(BaseModel):
    """Nondeterministic finite acceptor without epsilon transitions."""

    model_config = ConfigDict(frozen=True)

    alphabet: Alphabet
    states: tuple[str, ...] = Field(..., min_length=1)
    initial: str
    accepting: frozenset[str] = Field(default_factory=frozenset)
    transitions: tuple[tuple[str, str, str], ...] = Field(
        default=(), description="(source, symbol, target) triples"
    )

    _state_index: dict[str, int] = PrivateAttr(default_factory=dict)
    _succ: tuple[tuple[int, ...], ...] = PrivateAttr(default=())
    _letter_types: tuple[TypeMatrix, ...] = PrivateAttr(default=())
    _accept_mask: int = PrivateAttr(default=0)

    def _check_structure(self) -> None:
        names = set(self.states)
        if len(names) != len(self.states):
            raise AutomatonInputError("duplicate state names")
        if self.initial not in names:
            raise AutomatonInputError(f"initial state {self.initial!r} is not a state")
        unknown = self.accepting - names
        if unknown:
            raise AutomatonInputError(f"accepting states {sorted(unknown)} are not states")
        for source, symbol, target in self.transitions:
            where = f"transition {source} {symbol} {target}"
            if source not in names or target not in names:
                raise AutomatonInputError(f"{where} uses unknown state")
            if symbol not in self.alphabet:
                raise AutomatonInputError(f"{where} uses unknown symbol")

    def model_post_init(self, __context: Any) -> None:
        # pydantic runs this before any "after" validator, so check here
        self._check_structure()
        index = {name: i for i, name in enumerate(self.states)}
        succ = [[0] * len(self.states) for _ in self.alphabet.symbols]
        for source, symbol, target in self.transitions:
            succ[self.alphabet.index_of(symbol)][index[source]] |= 1 << index[target]
        self._state_index = index
        self._succ = tuple(tuple(rows) for rows in succ)
        self._letter_types = tuple(TypeMatrix(len(self.states), rows) for rows in succ)
        self._accept_mask = sum(1 << index[name] for name in self.accepting)

    @classmethod
    def from_masks(
        cls,
        alphabet: Alphabet,
        states: Sequence[str],
        initial: int,
        accepting_mask: int,
        succ: Sequence[Sequence[int]],
    ) -> "Nfa":
        """Build from index form: ``succ[symbol][state]`` is a bitmask of targets."""
        transitions = []
        for sym, rows in enumerate(succ):
            symbol = alphabet.symbols[sym]
            for source, row in enumerate(rows):
                target = 0
                while row:
                    if row & 1:
                        transitions.append((states[source], symbol, states[target]))
                    row >>= 1
                    target += 1
        accepting = frozenset(name for i, name in enumerate(states) if accepting_mask >> i & 1)
        return cls(
            alphabet=alphabet,
            states=tuple(states),
            initial=states[initial],
            accepting=accepting,
            transitions=tuple(transitions),
        )

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def initial_index(self) -> int:
        return self._state_index[self.initial]

    @property
    def accepting_mask(self) -> int:
        return self._accept_mask

    @property
    def letter_types(self) -> tuple[TypeMatrix, ...]:
        """Type of every symbol, in alphabet order."""
        return self._letter_types

    def state_index(self, name: str) -> int:
        try:
            return self._state_index[name]
        except KeyError:
            raise AutomatonInputError(f"unknown state {name!r}") from None

    def successors(self, symbol_index: int, state_index: int) -> int:
        return self._succ[symbol_index][state_index]

    @property
    def degree(self) -> int:
        """Largest number of targets of a single (state, symbol) pair."""
        return max(
            (row.bit_count() for rows in self._succ for row in rows),
            default=0,
        )


class Transducer(BaseModel):
    """
    Deterministic, complete letter-to-letter transducer with state labels.

    Reading a symbol moves along ``delta`` and emits the label of the state
    entered; the label of the initial state is never emitted.
    """

    model_config = ConfigDict(frozen=True)

    input_alphabet: Alphabet
    output_alphabet: Alphabet
    states: tuple[str, ...] = Field(..., min_length=1)
    initial: str
    delta: dict[str, dict[str, str]] = Field(..., description="state -> input symbol -> state")
    label: dict[str, str] = Field(..., description="state -> output symbol")

    _state_index: dict[str, int] = PrivateAttr(default_factory=dict)
    _next: tuple[tuple[int, ...], ...] = PrivateAttr(default=())
    _out: tuple[int, ...] = PrivateAttr(default=())

    def _check_total(self) -> None:
        names = set(self.states)
        if len(names) != len(self.states):
            raise AutomatonInputError("duplicate state names")
        if self.initial not in names:
            raise AutomatonInputError(f"initial state {self.initial!r} is not a state")
        for state in self.states:
            if state not in self.label:
                raise AutomatonInputError(f"state {state!r} has no label")
            if self.label[state] not in self.output_alphabet:
                raise AutomatonInputError(
                    f"label {self.label[state]!r} of {state!r} is not an output symbol"
                )
            row = self.delta.get(state)
            if row is None:
                raise AutomatonInputError(f"state {state!r} has no transitions")
            for symbol in self.input_alphabet.symbols:
                if symbol not in row:
                    raise AutomatonInputError(f"no transition from {state!r} on {symbol!r}")
                if row[symbol] not in names:
                    raise AutomatonInputError(
                        f"transition {state} {symbol} leads to unknown state {row[symbol]!r}"
                    )
            extra = set(row) - set(self.input_alphabet.symbols)
            if extra:
                raise AutomatonInputError(f"state {state!r} reads unknown symbols {sorted(extra)}")
        stray = (set(self.delta) | set(self.label)) - names
        if stray:
            raise AutomatonInputError(f"transitions or labels for unknown states {sorted(stray)}")

    def model_post_init(self, __context: Any) -> None:
        self._check_total()
        index = {name: i for i, name in enumerate(self.states)}
        self._state_index = index
        self._next = tuple(
            tuple(index[self.delta[state][symbol]] for symbol in self.input_alphabet.symbols)
            for state in self.states
        )
        self._out = tuple(self.output_alphabet.index_of(self.label[state]) for state in self.states)

    @classmethod
    def from_tables(
        cls,
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        states: Sequence[str],
        initial: str,
        step: dict[tuple[str, str], str],
        label: dict[str, str],
    ) -> "Transducer":
        """Build from a flat ``(state, symbol) -> state`` map."""
        delta: dict[str, dict[str, str]] = {state: {} for state in states}
        for (state, symbol), target in step.items():
            delta[state][symbol] = target
        return cls(
            input_alphabet=input_alphabet,
            output_alphabet=output_alphabet,
            states=tuple(states),
            initial=initial,
            delta=delta,
            label=dict(label),
        )

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def initial_index(self) -> int:
        return self._state_index[self.initial]

    @property
    def next_table(self) -> tuple[tuple[int, ...], ...]:
        """``next_table[state][symbol]`` as indices."""
        return self._next

    @property
    def label_table(self) -> tuple[int, ...]:
        return self._out


class RedundantProduct(BaseModel):
    """
    Two acceptors over the same product state space and transitions.

    ``b1`` accepts with the first factor's accepting states and ``b2`` with the
    second's, so every letter has the same type in both.
    """

    model_config = ConfigDict(frozen=True)

    b1: Nfa
    b2: Nfa

    @model_validator(mode="after")
    def _check_shared(self) -> "RedundantProduct":
        if self.b1.states != self.b2.states or self.b1.initial != self.b2.initial:
            raise AutomatonInputError("redundant product halves must share states")
        if self.b1.letter_types != self.b2.letter_types:
            raise AutomatonInputError("redundant product halves must share transitions")
        return self
