from itertools import product

import pytest

from src.core.automata import (
    complete,
    empty_nfa,
    nfa_intersection,
    nfa_membership,
    run_transducer,
    universal_nfa,
    word_type,
)
from src.core.errors import AutomatonInputError
from src.core.generators import gen_round_robin
from src.models.automata import Alphabet, Nfa, ProductAlphabet, Transducer, fresh_name


@pytest.fixture
def even_a(ab):
    """Words over {a, b} with an even number of a."""
    return Nfa(
        alphabet=ab,
        states=("e", "o"),
        initial="e",
        accepting=frozenset({"e"}),
        transitions=(("e", "a", "o"), ("o", "a", "e"), ("e", "b", "e"), ("o", "b", "o")),
    )


@pytest.fixture
def ends_b(ab):
    return Nfa(
        alphabet=ab,
        states=("s", "t"),
        initial="s",
        accepting=frozenset({"t"}),
        transitions=(("s", "a", "s"), ("s", "b", "s"), ("s", "b", "t")),
    )


def test_alphabet_rejects_duplicates_and_blanks():
    with pytest.raises(ValueError):
        Alphabet.of("a", "a")
    with pytest.raises(ValueError):
        Alphabet.of("a b")
    with pytest.raises(AutomatonInputError):
        Alphabet.of("a").index_of("z")


def test_product_alphabet_order(ab, bits):
    pairs = ProductAlphabet.of_pair(ab, bits)
    assert pairs.symbols == ("a/0", "a/1", "b/0", "b/1")
    assert pairs.pair_index(1, 0) == 2
    assert pairs.split(3) == (1, 1)
    assert pairs.encode_pair(["b", "a"], ["1", "0"]) == [3, 0]
    with pytest.raises(AutomatonInputError):
        pairs.encode_pair(["a"], [])


def test_fresh_name():
    assert fresh_name("sink", ["a"]) == "sink"
    assert fresh_name("sink", ["sink", "sink'"]) == "sink''"


def test_nfa_validation(ab):
    with pytest.raises(ValueError):
        Nfa(alphabet=ab, states=("s",), initial="t")
    with pytest.raises(ValueError):
        Nfa(alphabet=ab, states=("s",), initial="s", transitions=(("s", "c", "s"),))


def test_transducer_must_be_complete(ab, bits):
    with pytest.raises(ValueError, match="no transition"):
        Transducer.from_tables(ab, bits, ["q"], "q", {("q", "a"): "q"}, {"q": "0"})


def test_run_round_robin():
    t0 = gen_round_robin(3, 0)
    t1 = gen_round_robin(3, 1)
    x = ["{0}", "{2}", "{1}"]
    assert run_transducer(t0, x) == ["{0}", "{}", "{}"]
    assert run_transducer(t1, x) == ["{}", "{2}", "{}"]
    assert run_transducer(t0, []) == []
    with pytest.raises(AutomatonInputError):
        run_transducer(t0, ["{3}"])


def test_membership(even_a, ends_b):
    assert nfa_membership(even_a, [])
    assert nfa_membership(even_a, list("abab"))
    assert not nfa_membership(even_a, list("ab"))
    assert nfa_membership(ends_b, list("aab"))
    assert not nfa_membership(ends_b, list("ba"))


def test_word_type(even_a):
    t = word_type(even_a, list("ab"))
    assert t[0, 1] and t[1, 0]
    assert not t[0, 0]
    assert word_type(even_a, []) == word_type(even_a, list("bb"))


def test_intersection_is_conjunction(even_a, ends_b):
    both = nfa_intersection(even_a, ends_b)
    for length in range(5):
        for w in product("ab", repeat=length):
            expected = nfa_membership(even_a, w) and nfa_membership(ends_b, w)
            assert nfa_membership(both, w) == expected


def test_intersection_needs_same_alphabet(even_a, bits):
    with pytest.raises(AutomatonInputError):
        nfa_intersection(even_a, universal_nfa(bits))


def test_complete(even_a, ends_b):
    assert complete(even_a) is even_a
    total = complete(ends_b)
    assert total.size == 3
    for length in range(4):
        for w in product("ab", repeat=length):
            assert nfa_membership(total, w) == nfa_membership(ends_b, w)


def test_universal_and_empty(ab):
    assert nfa_membership(universal_nfa(ab), list("abba"))
    assert not nfa_membership(empty_nfa(ab), [])
