import pytest

from src.core.automata import nfa_membership, run_transducer
from src.core.errors import AutomatonInputError
from src.core.generators import (
    BOT,
    PAD,
    TOP,
    gen_constant_transducer,
    gen_example_asymmetric,
    gen_prime_family,
    gen_round_robin,
    gen_round_robin_bundle,
    gen_universality_reduction,
    normalize_degree,
)
from src.core.oracles import oracle_nfa_universality
from src.core.simulation import fixed_round_equivalent, fixed_round_simulates
from src.models.automata import Nfa
from src.models.instances import Provenance, Relation


def binary_nfa(bits, states, transitions):
    return Nfa(
        alphabet=bits,
        states=tuple(states),
        initial=states[0],
        accepting=frozenset(states),
        transitions=tuple(transitions),
    )


@pytest.fixture
def universal_one(bits):
    return binary_nfa(bits, ["n0"], [("n0", "0", "n0"), ("n0", "1", "n0")])


@pytest.fixture
def rejects_01(bits):
    return binary_nfa(
        bits, ["n0", "n1"], [("n0", "0", "n1"), ("n1", "0", "n0"), ("n0", "1", "n0")]
    )


def test_round_robin_shape():
    t = gen_round_robin(3, 1)
    assert t.size == 6
    assert t.initial == "q0"
    assert t.label["q1"] == "{1}"
    assert t.label["q1'"] == "{}"
    with pytest.raises(AutomatonInputError):
        gen_round_robin(1, 0)
    with pytest.raises(AutomatonInputError):
        gen_round_robin(3, 3)


def test_round_robin_grants_in_turn():
    t = gen_round_robin(2, 0)
    everyone = "{0,1}"
    assert run_transducer(t, [everyone] * 4) == ["{0}", "{1}", "{0}", "{1}"]
    assert run_transducer(t, ["{1}", "{1}"]) == ["{}", "{1}"]


def test_round_robin_bundle_expectations():
    bundle = gen_round_robin_bundle(3, 0, 2)
    [expected] = bundle.expected_for(Relation.EQUIVALENT)
    assert expected.k == 3
    assert expected.holds
    assert expected.provenance is Provenance.PUBLISHED


def test_example_expectations_hold(asymmetric):
    b = asymmetric
    for expected in b.expected_for(Relation.SIMULATES):
        verdict = fixed_round_simulates(b.t1, b.t2, b.lambda_, expected.k)
        assert verdict.holds is expected.holds
    [equivalence] = asymmetric.expected_for(Relation.EQUIVALENT)
    verdict = fixed_round_equivalent(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 2)
    assert verdict.equivalent is equivalence.holds


def test_example_outputs():
    bundle = gen_example_asymmetric()
    assert run_transducer(bundle.t1, ["a", "b"]) == ["0", "1"]
    assert run_transducer(bundle.t1, ["b", "a"]) == ["0", "1"]
    assert run_transducer(bundle.t2, ["a", "b"]) == ["0", "0"]


@pytest.mark.parametrize("m,t2_size", [(1, 4), (2, 7), (3, 12)])
def test_prime_family_shape(m, t2_size):
    bundle = gen_prime_family(m)
    assert bundle.name == f"primes-m{m}"
    assert bundle.t1.size == m + 1
    assert bundle.t2.size == t2_size
    assert bundle.lambda_.size == m


def test_prime_family_witness_k():
    [simulates] = gen_prime_family(3).expected_for(Relation.SIMULATES)
    assert simulates.k == 3 * 2 * 3 * 5
    assert gen_prime_family(3).expected_for(Relation.EXISTENTIAL) == []
    [first] = gen_prime_family(2).expected_for(Relation.EXISTENTIAL)
    assert first.k == 4
    assert first.provenance is Provenance.DERIVED


def test_prime_family_bounds():
    with pytest.raises(AutomatonInputError):
        gen_prime_family(0)
    with pytest.raises(AutomatonInputError):
        gen_prime_family(5)


def test_prime_family_m1_holds_at_one():
    bundle = gen_prime_family(1)
    assert fixed_round_simulates(bundle.t1, bundle.t2, bundle.lambda_, 1).holds


def test_prime_restriction(primes_2):
    lam = primes_2.lambda_
    assert nfa_membership(lam, ["{1}", "{2}", "{1}", "{2}"])
    assert not nfa_membership(lam, ["{2}", "{1}"])


def test_normalize_keeps_low_degree(rejects_01):
    assert normalize_degree(rejects_01) is rejects_01


def test_normalize_preserves_universality(bits):
    fan = [("n0", "0", "n0"), ("n0", "0", "n1"), ("n0", "0", "n2")]
    loops = [(q, s, q) for q in ("n0", "n1", "n2") for s in ("0", "1")]
    universal = binary_nfa(bits, ["n0", "n1", "n2"], fan + loops)
    stuck = binary_nfa(
        bits,
        ["n0", "n1", "n2"],
        [("n0", "0", "n0"), ("n0", "0", "n1"), ("n0", "0", "n2"), ("n1", "0", "n1")],
    )
    for n, expected in ((universal, True), (stuck, False)):
        assert n.degree == 3
        normalized = normalize_degree(n)
        assert normalized.degree <= 2
        assert normalized.alphabet == bits
        assert oracle_nfa_universality(n) is expected
        assert oracle_nfa_universality(normalized) is expected


def test_reduction_needs_all_accepting_binary(bits, ab):
    partial = Nfa(alphabet=bits, states=("s", "t"), initial="s", accepting=frozenset({"s"}))
    with pytest.raises(AutomatonInputError):
        gen_universality_reduction(partial)
    other = Nfa(alphabet=ab, states=("s",), initial="s", accepting=frozenset({"s"}))
    with pytest.raises(AutomatonInputError):
        gen_universality_reduction(other)


def test_reduction_shape(universal_one):
    plain = gen_universality_reduction(universal_one)
    assert plain.name == "universality"
    assert plain.t1.input_alphabet.symbols == ("a", "b", "c", "d")
    assert set(plain.t1.output_alphabet.symbols) == {TOP, BOT}
    assert plain.lambda_.size == 4
    padded = gen_universality_reduction(universal_one, padded=True)
    assert padded.name == "universality-padded"
    assert PAD in padded.t1.input_alphabet
    assert padded.t1.size == 5
    assert padded.lambda_.size == 5


def test_reduction_records_universality(universal_one, rejects_01):
    [plain] = gen_universality_reduction(universal_one).expected
    assert plain.relation is Relation.EQUIVALENT
    assert plain.k == 2
    assert plain.holds is True
    assert plain.provenance is Provenance.DERIVED
    [padded] = gen_universality_reduction(rejects_01, padded=True).expected
    assert padded.relation is Relation.EXISTENTIAL_EQUIVALENT
    assert padded.k is None
    assert padded.holds is False
    assert gen_universality_reduction(rejects_01, cutoff=None).expected == ()
    assert gen_universality_reduction(rejects_01, cutoff=1).expected == ()


def test_reduction_universal_is_equivalent(universal_one):
    bundle = gen_universality_reduction(universal_one)
    assert fixed_round_equivalent(bundle.t1, bundle.t2, bundle.lambda_, 2).equivalent


def test_reduction_non_universal_is_not(rejects_01):
    bundle = gen_universality_reduction(rejects_01)
    verdict = fixed_round_equivalent(bundle.t1, bundle.t2, bundle.lambda_, 2)
    assert not verdict.equivalent
    assert not verdict.forward.holds
    assert verdict.backward.holds


def test_constant_transducer():
    t = gen_constant_transducer(2)
    assert run_transducer(t, ["{0,1}", "{1}"]) == ["{}", "{}"]
