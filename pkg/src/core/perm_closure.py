"""
Permutation closure over the Parikh-pair quotient alphabet.

A k-round word pair is read one round at a time; a round is identified
with its Parikh pair (input counts, output counts). The type of a Parikh
pair is the OR of the types of every word pair with that image, computed
by dynamic programming over sub-vectors, peeling the last letter:

    M(0, 0) = I
    M(p, o) = OR over a, b with p[a] > 0, o[b] > 0 of M(p - e_a, o - e_b) · τ(a, b)
"""

import logging
from collections.abc import Iterator, Sequence
from itertools import combinations_with_replacement
from math import comb

from src.core.errors import AutomatonInputError, QuotientCapExceeded
from src.core.round_words import parikh_counts
from src.models.automata import Alphabet, Nfa, ProductAlphabet
from src.models.profiles import TypeProfile
from src.models.type_matrix import TypeMatrix
from src.models.words import ParikhPair, ParikhVector, RoundSpec, as_round_spec

logger = logging.getLogger(__name__)

PairKey = tuple[tuple[int, ...], tuple[int, ...]]


def product_alphabet_of(n: Nfa) -> ProductAlphabet:
    if not isinstance(n.alphabet, ProductAlphabet):
        raise AutomatonInputError("permutation closure needs an acceptor over input/output pairs")
    return n.alphabet


# =============================================================================
# Quotient alphabet
# =============================================================================


def compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write k as an ordered sum of ``parts`` non-negative integers."""
    for chosen in combinations_with_replacement(range(parts), k):
        yield parikh_counts(chosen, parts)


def count_parikh_pairs(input_size: int, output_size: int, k: int) -> int:
    return comb(k + input_size - 1, input_size - 1) * comb(k + output_size - 1, output_size - 1)


def parikh_pair_keys(input_size: int, output_size: int, k: int) -> Iterator[PairKey]:
    outputs = list(compositions(k, output_size))
    for p in compositions(k, input_size):
        for o in outputs:
            yield p, o


def enumerate_parikh_pairs(
    sigma_i: Alphabet, sigma_o: Alphabet, k: RoundSpec | int
) -> list[ParikhPair]:
    """Every Parikh pair of norm k, each once, in a fixed order."""
    spec = as_round_spec(k)
    return [
        ParikhPair(
            input=ParikhVector(alphabet=sigma_i, counts=p),
            output=ParikhVector(alphabet=sigma_o, counts=o),
        )
        for p, o in parikh_pair_keys(len(sigma_i), len(sigma_o), spec.k)
    ]


def check_quotient_cap(alphabet: ProductAlphabet, k: int, cap: int | None) -> int:
    """
    Raises:
        QuotientCapExceeded: If the Parikh-pair alphabet at k has more than ``cap`` letters
    """
    size = count_parikh_pairs(len(alphabet.input), len(alphabet.output), k)
    if cap is not None and size > cap:
        raise QuotientCapExceeded(k, size, cap)
    return size


# =============================================================================
# Parikh-pair types
# =============================================================================


class ParikhTypeTable:
    """
    Memo of Parikh-pair types for one base acceptor.

    The table is the only mutable structure of the closure machinery; confine
    each table to a single worker. Acceptors with identical transitions (the
    two halves of a redundant product) may share one table.
    """

    def __init__(self, base: Nfa):
        self.base = base
        self.alphabet = product_alphabet_of(base)
        self.input_size = len(self.alphabet.input)
        self.output_size = len(self.alphabet.output)
        self._letter_types = base.letter_types
        zero = ((0,) * self.input_size, (0,) * self.output_size)
        self._memo: dict[PairKey, TypeMatrix] = {zero: TypeMatrix.identity(base.size)}

    def __len__(self) -> int:
        return len(self._memo)

    def shares_transitions(self, other: Nfa) -> bool:
        return other.alphabet == self.base.alphabet and other.letter_types == self._letter_types

    def type_of(self, p: tuple[int, ...], o: tuple[int, ...]) -> TypeMatrix:
        key = (p, o)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if sum(p) != sum(o):
            raise AutomatonInputError(f"Parikh norms differ: {sum(p)} vs {sum(o)}")
        if len(p) != self.input_size or len(o) != self.output_size:
            raise AutomatonInputError("Parikh vector does not match the alphabet")
        dim = self.base.size
        acc = [0] * dim
        for a, pa in enumerate(p):
            if not pa:
                continue
            p_prev = p[:a] + (pa - 1,) + p[a + 1 :]
            for b, ob in enumerate(o):
                if not ob:
                    continue
                o_prev = o[:b] + (ob - 1,) + o[b + 1 :]
                prev = self.type_of(p_prev, o_prev)
                letter = self._letter_types[a * self.output_size + b]
                for i, row in enumerate(prev.rows):
                    if row:
                        acc[i] |= letter.post(row)
        result = TypeMatrix(dim, acc)
        self._memo[key] = result
        return result

    def level(self, k: int) -> Iterator[tuple[PairKey, TypeMatrix]]:
        """Types of every Parikh pair of norm k, in enumeration order."""
        for p, o in parikh_pair_keys(self.input_size, self.output_size, k):
            yield (p, o), self.type_of(p, o)

    def witness(
        self, p: tuple[int, ...], o: tuple[int, ...], source: int, target: int
    ) -> list[tuple[int, int]]:
        """
        A concrete word pair with image (p, o) running from ``source`` to ``target``.

        Returns:
            The word as (input index, output index) letters

        Raises:
            AutomatonInputError: If no such word exists
        """
        if not self.type_of(p, o)[source, target]:
            raise AutomatonInputError("no word with this Parikh image connects the states")
        letters: list[tuple[int, int]] = []
        while sum(p):
            step = self._last_letter(p, o, source, target)
            a, b, mid = step
            letters.append((a, b))
            p = p[:a] + (p[a] - 1,) + p[a + 1 :]
            o = o[:b] + (o[b] - 1,) + o[b + 1 :]
            target = mid
        letters.reverse()
        return letters

    def _last_letter(
        self, p: tuple[int, ...], o: tuple[int, ...], source: int, target: int
    ) -> tuple[int, int, int]:
        for a, pa in enumerate(p):
            if not pa:
                continue
            p_prev = p[:a] + (pa - 1,) + p[a + 1 :]
            for b, ob in enumerate(o):
                if not ob:
                    continue
                o_prev = o[:b] + (ob - 1,) + o[b + 1 :]
                reach = self.type_of(p_prev, o_prev).rows[source]
                letter = self._letter_types[a * self.output_size + b]
                mid = 0
                while reach:
                    if reach & 1 and letter[mid, target]:
                        return a, b, mid
                    reach >>= 1
                    mid += 1
        raise AssertionError("Parikh type table is inconsistent")


def type_of_parikh(n: Nfa, p: ParikhVector, o: ParikhVector) -> TypeMatrix:
    """
    Type of a Parikh pair: bits[s][t] = 1 iff some word pair with image (p, o) runs s to t.

    Raises:
        AutomatonInputError: If the norms differ or the vectors do not match n's alphabet
    """
    alphabet = product_alphabet_of(n)
    if p.alphabet != alphabet.input or o.alphabet != alphabet.output:
        raise AutomatonInputError("Parikh vectors are not over the acceptor's alphabets")
    return ParikhTypeTable(n).type_of(p.counts, o.counts)


# =============================================================================
# Closure automaton
# =============================================================================


class PermClosureAutomaton:
    """
    Acceptor over k-rounds that reads each round as its Parikh pair.

    It accepts (x, y) iff some (x', y') with x' and y' round-equivalent to x
    and y is accepted by the base acceptor.
    """

    def __init__(self, base: Nfa, k: RoundSpec | int, table: ParikhTypeTable | None = None):
        self.base = base
        self.k = as_round_spec(k)
        self.alphabet = product_alphabet_of(base)
        if table is None:
            table = ParikhTypeTable(base)
        elif not table.shares_transitions(base):
            raise AutomatonInputError("type table belongs to an acceptor with other transitions")
        self.table = table

    @property
    def quotient_size(self) -> int:
        return count_parikh_pairs(len(self.alphabet.input), len(self.alphabet.output), self.k.k)

    def quotient_alphabet(self) -> Iterator[PairKey]:
        return parikh_pair_keys(len(self.alphabet.input), len(self.alphabet.output), self.k.k)

    def parikh_pairs(self) -> list[ParikhPair]:
        return enumerate_parikh_pairs(self.alphabet.input, self.alphabet.output, self.k)

    def transition_type(self, key: PairKey) -> TypeMatrix:
        return self.table.type_of(*key)

    def round_keys(self, x: Sequence[str], y: Sequence[str]) -> list[PairKey] | None:
        """Parikh pair of each round, or None when (x, y) is not a k-round word pair."""
        if len(x) != len(y) or len(x) % self.k.k:
            return None
        xs = self.alphabet.input.encode(x)
        ys = self.alphabet.output.encode(y)
        k = self.k.k
        return [
            (
                parikh_counts(xs[i : i + k], len(self.alphabet.input)),
                parikh_counts(ys[i : i + k], len(self.alphabet.output)),
            )
            for i in range(0, len(xs), k)
        ]

    def accepts(self, x: Sequence[str], y: Sequence[str]) -> bool:
        keys = self.round_keys(x, y)
        if keys is None:
            return False
        current = 1 << self.base.initial_index
        for key in keys:
            current = self.transition_type(key).post(current)
            if not current:
                return False
        return bool(current & self.base.accepting_mask)


def perm_closure(
    n: Nfa, k: RoundSpec | int, table: ParikhTypeTable | None = None
) -> PermClosureAutomaton:
    return PermClosureAutomaton(n, k, table)


# =============================================================================
# Profiles
# =============================================================================


def type_profile(
    b: Nfa, k: RoundSpec | int, table: ParikhTypeTable | None = None
) -> TypeProfile:
    """The set of types of all Parikh pairs of norm k."""
    spec = as_round_spec(k)
    if table is None:
        table = ParikhTypeTable(b)
    matrices = frozenset(matrix for _, matrix in table.level(spec.k))
    logger.debug(f"Profile at k={spec.k}: {len(matrices)} types, table size {len(table)}")
    return TypeProfile(k=spec.k, dim=b.size, matrices=matrices)


def dump_profile(profile: TypeProfile) -> str:
    """One hex-serialized matrix per line, sorted."""
    return "\n".join(sorted(m.hex() for m in profile.matrices)) + "\n"
