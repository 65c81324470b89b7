import pytest

from src.core.automata import universal_nfa
from src.core.errors import AutomatonInputError, BudgetExceeded
from src.core.oracles import (
    oracle_bounded_universality,
    oracle_fixed_simulation,
    oracle_nfa_universality,
    oracle_perm_membership,
    round_rewritings,
)
from src.core.trace_product import trace_dfa
from src.models.automata import Nfa
from src.models.oracle import OracleBudget


@pytest.fixture
def rejects_01(bits):
    return Nfa(
        alphabet=bits,
        states=("n0", "n1"),
        initial="n0",
        accepting=frozenset({"n0", "n1"}),
        transitions=(("n0", "0", "n1"), ("n1", "0", "n0"), ("n0", "1", "n0")),
    )


def test_round_rewritings():
    words = {"".join(w) for w in round_rewritings(list("abab"), 2)}
    assert words == {"abab", "abba", "baab", "baba"}
    assert len(list(round_rewritings(list("aaa"), 3))) == 1


def test_fixed_simulation_example(asymmetric):
    b = asymmetric
    assert oracle_fixed_simulation(b.t1, b.t2, b.lambda_, 2).holds
    refuted = oracle_fixed_simulation(b.t1, b.t2, b.lambda_, 1)
    assert not refuted.holds
    assert refuted.witness == ["b"]
    reverse = oracle_fixed_simulation(b.t2, b.t1, None, 2)
    assert reverse.witness == ["a", "b"]


def test_fixed_simulation_budget(asymmetric):
    b = asymmetric
    with pytest.raises(BudgetExceeded) as exc:
        oracle_fixed_simulation(b.t1, b.t2, None, 7, OracleBudget(max_rounds=2))
    assert exc.value.what == "word length"
    with pytest.raises(BudgetExceeded):
        oracle_fixed_simulation(b.t1, b.t2, None, 2, OracleBudget(max_enumerations=5))


def test_fixed_simulation_alphabet_mismatch(asymmetric, bits):
    b = asymmetric
    with pytest.raises(AutomatonInputError):
        oracle_fixed_simulation(b.t1, b.t2, universal_nfa(bits), 1)


def test_perm_membership(asymmetric):
    trace = trace_dfa(asymmetric.t2)
    # t2(ba) = 10, so the swapped output of ab is reachable by reordering
    assert oracle_perm_membership(trace, 2, ["a", "b"], ["0", "1"])
    assert not oracle_perm_membership(trace, 2, ["a", "b"], ["1", "1"])
    assert not oracle_perm_membership(trace, 2, ["a"], ["1"])
    with pytest.raises(AutomatonInputError):
        oracle_perm_membership(universal_nfa(asymmetric.t1.input_alphabet), 1, ["a"], ["a"])


def test_universality(bits, rejects_01):
    assert oracle_nfa_universality(universal_nfa(bits))
    assert not oracle_nfa_universality(rejects_01)
    with pytest.raises(BudgetExceeded):
        oracle_nfa_universality(rejects_01, cutoff=1)


def test_bounded_universality(rejects_01):
    assert oracle_bounded_universality(rejects_01, 1)
    assert not oracle_bounded_universality(rejects_01, 2)
