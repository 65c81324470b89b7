import random
from math import factorial

import pytest

from src.core.automata import run_transducer
from src.core.errors import AutomatonInputError
from src.core.generators import (
    gen_constant_transducer,
    gen_prime_family,
    gen_round_robin,
    gen_single_process_watcher,
)
from src.core.symmetry import (
    apply_permutation,
    existential_symmetry,
    is_round_symmetric,
    is_round_symmetric_wrt,
    permute_transducer,
    process_count,
    symmetry_generators,
)
from src.models.automata import Transducer
from src.models.symmetry import Permutation, ProcessAlphabet, parse_subset, subset_name


@pytest.mark.parametrize(
    "text,images",
    [
        ("(0 1 2)", (1, 2, 0)),
        ("(0 2)(1)", (2, 1, 0)),
        ("(0 1)(1 2)", (1, 2, 0)),
        ("(0,1)", (1, 0, 2)),
        ("1,0,2", (1, 0, 2)),
        ("()", (0, 1, 2)),
        ("id", (0, 1, 2)),
    ],
)
def test_parse_permutation(text, images):
    assert Permutation.parse(text, 3).images == images


@pytest.mark.parametrize("text", ["(0 3)", "(0 1", "1,1,0", "0,1", "(a b)", "x"])
def test_parse_permutation_errors(text):
    with pytest.raises(AutomatonInputError):
        Permutation.parse(text, 3)


def test_group_operations():
    cycle = Permutation.cycle(3)
    assert cycle.cycle_notation == "(0 1 2)"
    assert cycle.order == 3
    assert cycle.compose(cycle.inverse).is_identity
    assert cycle.compose(cycle).compose(cycle).is_identity
    assert cycle.inverse.images == (2, 0, 1)
    assert Permutation.transposition(3).cycle_notation == "(0 1)"
    assert Permutation.identity(2).cycle_notation == "()"
    with pytest.raises(AutomatonInputError):
        Permutation.transposition(1)


def test_subsets():
    assert subset_name([2, 0, 2]) == "{0,2}"
    assert subset_name([]) == "{}"
    assert parse_subset("{0,2}", 3) == frozenset({0, 2})
    assert parse_subset("{}", 3) == frozenset()
    with pytest.raises(AutomatonInputError):
        parse_subset("{3}", 3)
    with pytest.raises(AutomatonInputError):
        parse_subset("0,1", 3)
    assert ProcessAlphabet(m=2).symbols == ("{}", "{0}", "{1}", "{0,1}")


def test_apply_permutation():
    pi = Permutation.cycle(3)
    assert apply_permutation(pi, ["{0}", "{0,2}", "{}"]) == ["{1}", "{0,1}", "{}"]


def test_permuted_transducer_conjugates_runs():
    t = gen_round_robin(3, 0)
    pi = Permutation.cycle(3)
    t_pi = permute_transducer(t, pi)
    x = ["{0}", "{1,2}", "{0,1,2}", "{2}"]
    expected = apply_permutation(pi, run_transducer(t, apply_permutation(pi.inverse, x)))
    assert run_transducer(t_pi, x) == expected


def test_process_count():
    assert process_count(gen_round_robin(3, 0)) == 3
    with pytest.raises(AutomatonInputError):
        process_count(gen_prime_family(2).t1)


def test_generators():
    assert [pi.cycle_notation for pi in symmetry_generators(3)] == ["(0 1)", "(0 1 2)"]
    assert [pi.cycle_notation for pi in symmetry_generators(2)] == ["(0 1)"]


def test_round_robin_symmetric_at_m():
    t = gen_round_robin(2, 0)
    verdict = is_round_symmetric(t, 2)
    assert verdict.symmetric
    assert verdict.m == 2
    assert not is_round_symmetric(t, 1).symmetric


def test_watcher_is_not_symmetric():
    t = gen_single_process_watcher(2, 0)
    verdict = is_round_symmetric_wrt(t, Permutation.transposition(2), 2)
    assert not verdict.holds
    assert len(verdict.counterexample.x) == 2 * verdict.counterexample.rounds


def test_symmetry_needs_two_processes():
    with pytest.raises(AutomatonInputError):
        is_round_symmetric(gen_constant_transducer(1), 1)


def test_existential_symmetry_round_robin():
    verdict = existential_symmetry(gen_round_robin(2, 0), 4)
    assert verdict.found
    assert verdict.k == 2
    assert verdict.certificate.symmetric


def test_existential_symmetry_constant():
    verdict = existential_symmetry(gen_constant_transducer(3), 3)
    assert verdict.found
    assert verdict.k == 1
    assert verdict.candidate == 1


def test_existential_symmetry_not_found():
    verdict = existential_symmetry(gen_single_process_watcher(2, 0), 3)
    assert not verdict.found
    assert verdict.certificate is None
    assert not verdict.per_generator["(0 1)"].found


@pytest.mark.slow
def test_existential_symmetry_round_robin_three():
    verdict = existential_symmetry(gen_round_robin(3, 0), 3)
    assert verdict.found
    assert verdict.k == 3
    assert verdict.per_generator["(0 1 2)"].k == 3


def echo_transducer(m):
    """Outputs the set it just read; every process permutation is a symmetry."""
    symbols = ProcessAlphabet(m=m).symbols
    states = tuple(f"s{i}" for i in range(len(symbols)))
    alphabet = ProcessAlphabet(m=m).alphabet
    return Transducer(
        input_alphabet=alphabet,
        output_alphabet=alphabet,
        states=states,
        initial=states[0],
        delta={q: dict(zip(symbols, states)) for q in states},
        label=dict(zip(states, symbols)),
    )


def random_permutation(rng, m):
    return Permutation(images=tuple(rng.sample(range(m), m)))


def power(pi, n):
    result = Permutation.identity(pi.m)
    for _ in range(n):
        result = result.compose(pi)
    return result


def same_table(t1, t2):
    return t1.states == t2.states and t1.delta == t2.delta and t1.label == t2.label


def test_symmetries_closed_under_composition():
    rng = random.Random(7)
    t = echo_transducer(3)
    for _ in range(10):
        pi = random_permutation(rng, 3)
        chi = random_permutation(rng, 3)
        assert is_round_symmetric_wrt(t, pi, 1).holds
        assert is_round_symmetric_wrt(t, chi, 1).holds
        assert is_round_symmetric_wrt(t, pi.compose(chi), 1).holds


def test_permuting_is_a_group_action():
    rng = random.Random(11)
    t = gen_round_robin(3, 0)
    for _ in range(10):
        pi = random_permutation(rng, 3)
        chi = random_permutation(rng, 3)
        assert same_table(
            permute_transducer(t, pi.compose(chi)),
            permute_transducer(permute_transducer(t, chi), pi),
        )


@pytest.mark.parametrize("m", [2, 3])
def test_factorial_power_is_identity(m):
    rng = random.Random(m)
    t = gen_round_robin(m, 0)
    for _ in range(5):
        pi = random_permutation(rng, m)
        assert same_table(permute_transducer(t, power(pi, factorial(m))), t)


def test_round_robin_three_transposition_fails_at_one():
    t = gen_round_robin(3, 0)
    assert not is_round_symmetric_wrt(t, Permutation.transposition(3), 1).holds


@pytest.mark.slow
def test_round_robin_three_cycle_holds_at_three():
    t = gen_round_robin(3, 0)
    assert is_round_symmetric_wrt(t, Permutation.cycle(3), 3).holds
