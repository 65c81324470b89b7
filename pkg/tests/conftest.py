"""
Shared fixtures: seeded random automata, the standard bundles, and a clean
settings/dependency state per test.
"""

import numpy as np
import pytest

from src.cli import dependencies
from src.config.settings import get_settings
from src.core.generators import gen_example_asymmetric, gen_prime_family, gen_round_robin_bundle
from src.models.automata import Alphabet, Nfa, ProductAlphabet, Transducer


@pytest.fixture(autouse=True)
def clean_state():
    get_settings.cache_clear()
    dependencies.reset()
    yield
    get_settings.cache_clear()
    dependencies.reset()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def ab():
    return Alphabet.of("a", "b")


@pytest.fixture
def bits():
    return Alphabet.of("0", "1")


@pytest.fixture
def random_transducer(rng, ab, bits):
    """Factory for complete transducers over {a, b} / {0, 1}."""

    def make(size: int = 3) -> Transducer:
        states = [f"q{i}" for i in range(size)]
        step = {
            (q, a): states[int(rng.integers(size))] for q in states for a in ab.symbols
        }
        label = {q: bits.symbols[int(rng.integers(len(bits)))] for q in states}
        return Transducer.from_tables(ab, bits, states, states[0], step, label)

    return make


@pytest.fixture
def random_pair_nfa(rng, ab, bits):
    """Factory for acceptors over the {a, b} x {0, 1} pair alphabet."""
    alphabet = ProductAlphabet.of_pair(ab, bits)

    def make(size: int = 3) -> Nfa:
        states = [f"s{i}" for i in range(size)]
        succ = [
            [int(rng.integers(1 << size)) for _ in range(size)] for _ in range(len(alphabet))
        ]
        accepting = int(rng.integers(1, 1 << size))
        return Nfa.from_masks(alphabet, states, 0, accepting, succ)

    return make


@pytest.fixture
def asymmetric():
    return gen_example_asymmetric()


@pytest.fixture
def round_robin_2():
    return gen_round_robin_bundle(2, 0, 1)


@pytest.fixture
def primes_2():
    return gen_prime_family(2)
