import pytest

from src.core.errors import ReuseMismatchError
from src.core.existential import (
    ExistentialSearch,
    existential_equivalence,
    existential_search,
    profile_fingerprint,
)
from src.core.generators import gen_single_process_watcher
from src.core.symmetry import permute_transducer
from src.models.profiles import TypeProfile
from src.models.symmetry import Permutation
from src.models.type_matrix import TypeMatrix
from src.models.verdicts import ExistentialOutcome, ProfileSource, SimulationVerdict


def test_example_found_at_two(asymmetric):
    verdict = existential_search(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 5)
    assert verdict.found
    assert verdict.k == 2
    assert verdict.certificate.holds
    assert verdict.multiples_hold
    assert [entry.k for entry in verdict.profile_log] == [1, 2]
    assert verdict.profile_log[0].answer is False
    assert verdict.profile_log[1].answer is True


def test_prime_family_found_at_four(primes_2):
    b = primes_2
    verdict = existential_search(b.t1, b.t2, b.lambda_, 6)
    assert verdict.outcome is ExistentialOutcome.FOUND
    assert verdict.k == 4


def test_bounded_negative():
    watcher = gen_single_process_watcher(2, 0)
    swapped = permute_transducer(watcher, Permutation.transposition(2))
    verdict = existential_search(swapped, watcher, None, 4)
    assert verdict.outcome is ExistentialOutcome.NOT_FOUND_UP_TO
    assert verdict.k is None
    assert verdict.k_max == 4
    assert len(verdict.profile_log) == 4
    assert all(entry.answer is False for entry in verdict.profile_log)


def test_reused_entries_point_back():
    watcher = gen_single_process_watcher(2, 0)
    swapped = permute_transducer(watcher, Permutation.transposition(2))
    verdict = existential_search(swapped, watcher, None, 5, verify_reuse=True)
    assert verdict.reuse_count > 0
    seen = {}
    for entry in verdict.profile_log:
        if entry.source is ProfileSource.REUSED:
            origin = seen[entry.reused_from]
            assert origin.source is ProfileSource.COMPUTED
            assert origin.fingerprint == entry.fingerprint
            assert origin.answer == entry.answer
            assert entry.reuse_verified is True
        seen[entry.k] = entry


def test_skipped_round_lengths(asymmetric):
    verdict = existential_search(
        asymmetric.t2, asymmetric.t1, asymmetric.lambda_, 4, quotient_cap=16
    )
    assert not verdict.found
    # 9 Parikh pairs at k=2, 16 at k=3, 25 at k=4
    assert verdict.skipped == [4]
    assert verdict.profile_log[-1].quotient_letters == 25


def test_search_rejects_bad_bound(asymmetric):
    with pytest.raises(ValueError):
        existential_search(asymmetric.t1, asymmetric.t2, None, 0)


def _constant_profile(k):
    return TypeProfile(k=k, dim=2, matrices=frozenset({TypeMatrix.identity(2)}))


def test_equal_profiles_reuse_the_answer(asymmetric, monkeypatch):
    search = ExistentialSearch(asymmetric.t2, asymmetric.t1, asymmetric.lambda_)
    monkeypatch.setattr(search.checker, "profile", _constant_profile)
    first = search.step(1)
    second = search.step(2)
    assert first.source is ProfileSource.COMPUTED
    assert second.source is ProfileSource.REUSED
    assert second.reused_from == 1
    assert second.answer == first.answer
    assert second.fingerprint == profile_fingerprint(_constant_profile(2))


def test_reuse_mismatch_is_raised(asymmetric, monkeypatch):
    search = ExistentialSearch(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, verify_reuse=True)
    monkeypatch.setattr(search.checker, "profile", _constant_profile)
    search.step(1)
    monkeypatch.setattr(
        search.checker, "check", lambda k: SimulationVerdict(holds=True, k=k)
    )
    with pytest.raises(ReuseMismatchError):
        search.step(2)


def test_existential_equivalence_round_robin(round_robin_2):
    b = round_robin_2
    verdict = existential_equivalence(b.t1, b.t2, b.lambda_, 4)
    assert verdict.forward.k == 2
    assert verdict.backward.k == 2
    assert verdict.k == 2
    assert verdict.equivalent


def test_existential_equivalence_example(asymmetric):
    verdict = existential_equivalence(asymmetric.t1, asymmetric.t2, asymmetric.lambda_, 4)
    assert verdict.forward.found
    assert not verdict.backward.found
    assert verdict.k is None
    assert not verdict.equivalent
