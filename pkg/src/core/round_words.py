"""
Round decomposition and Parikh images of words.
"""

from collections import Counter
from collections.abc import Sequence

from src.core.errors import NotARoundWordError
from src.models.automata import Alphabet
from src.models.words import ParikhVector, RoundSpec, as_round_spec


def parikh_counts(word: Sequence[int], size: int) -> tuple[int, ...]:
    """Counts of an index word over an alphabet of ``size`` symbols."""
    counts = [0] * size
    for sym in word:
        counts[sym] += 1
    return tuple(counts)


def parikh(w: Sequence[str], alphabet: Alphabet) -> ParikhVector:
    return ParikhVector(alphabet=alphabet, counts=parikh_counts(alphabet.encode(w), len(alphabet)))


def rounds(w: Sequence[str], k: RoundSpec | int) -> list[list[str]]:
    """
    Split a k-round word into its rounds.

    Raises:
        NotARoundWordError: If k does not divide the length of w
    """
    spec = as_round_spec(k)
    if spec.rounds_in(len(w)) is None:
        raise NotARoundWordError(len(w), spec.k)
    return [list(w[i : i + spec.k]) for i in range(0, len(w), spec.k)]


def round_equivalent(x: Sequence[str], y: Sequence[str], k: RoundSpec | int) -> bool:
    """True iff x and y are k-round words whose i-th rounds are permutations of each other."""
    spec = as_round_spec(k)
    if len(x) != len(y) or spec.rounds_in(len(x)) is None:
        return False
    return all(
        Counter(x[i : i + spec.k]) == Counter(y[i : i + spec.k]) for i in range(0, len(x), spec.k)
    )


def canonical_representative(p: ParikhVector) -> list[str]:
    """The word with Parikh image p whose symbols appear in alphabet order."""
    word: list[str] = []
    for symbol, count in zip(p.alphabet.symbols, p.counts):
        word.extend([symbol] * count)
    return word
