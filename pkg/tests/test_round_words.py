import pytest

from src.core.errors import AutomatonInputError, NotARoundWordError
from src.core.round_words import canonical_representative, parikh, round_equivalent, rounds
from src.models.words import ParikhPair, ParikhVector, RoundSpec

X = list("abaabbabbbaa")
Y = list("baabbaabbaba")


def test_rounds_split():
    assert rounds(list("abcdef"), 3) == [["a", "b", "c"], ["d", "e", "f"]]
    assert rounds([], 2) == []


def test_rounds_rejects_partial_round():
    with pytest.raises(NotARoundWordError) as exc:
        rounds(list("abcde"), 2)
    assert exc.value.length == 5
    assert exc.value.k == 2


@pytest.mark.parametrize(
    "k,expected",
    [(1, False), (2, False), (3, True), (4, False), (6, True), (12, True)],
)
def test_round_equivalence(k, expected):
    assert round_equivalent(X, Y, k) is expected


def test_round_equivalence_needs_whole_rounds():
    assert not round_equivalent(list("ab"), list("ba"), 3)
    assert not round_equivalent(list("ab"), list("bab"), 1)
    assert round_equivalent([], [], 5)


def test_parikh_vector(ab):
    p = parikh(list("abaab"), ab)
    assert p.counts == (3, 2)
    assert p.norm == 5
    assert p.count("b") == 2
    assert p.as_dict() == {"a": 3, "b": 2}
    assert canonical_representative(p) == list("aaabb")
    assert (p + parikh(["b"], ab)).counts == (3, 3)


def test_parikh_vector_validation(ab, bits):
    with pytest.raises(ValueError):
        ParikhVector(alphabet=ab, counts=(1,))
    with pytest.raises(ValueError):
        ParikhVector(alphabet=ab, counts=(1, -1))
    with pytest.raises(AutomatonInputError):
        parikh(["a"], ab) + parikh(["0"], bits)


def test_parikh_pair_norms(ab, bits):
    pair = ParikhPair(input=parikh(list("ab"), ab), output=parikh(list("00"), bits))
    assert pair.norm == 2
    assert pair.key == ((1, 1), (2, 0))
    with pytest.raises(ValueError):
        ParikhPair(input=parikh(["a"], ab), output=parikh(list("00"), bits))


def test_round_spec():
    spec = RoundSpec(k=4)
    assert spec.rounds_in(8) == 2
    assert spec.rounds_in(6) is None
    with pytest.raises(ValueError):
        RoundSpec(k=0)
