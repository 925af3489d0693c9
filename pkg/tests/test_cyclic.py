import pytest

from src.cyclic.factorizations import (check_hajos_factorization_chain, enumerate_factorizations,
                                       extend_to_factorization, extract_restivo_pair, is_factorization,
                                       is_hajos_factorization, periods)
from src.cyclic.krasner import check_krasner_chain, enumerate_krasner, is_krasner
from src.cyclic.numbers import divisors, is_cbc_hajos_number, is_hajos_number, prime_factors
from src.errors import EnvelopeExceededError, InvalidInputError
from src.models.cyclic import FactorizationPair, ResidueSet


def test_prime_factors_and_divisors():
    assert prime_factors(72) == [2, 2, 2, 3, 3]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(InvalidInputError):
        prime_factors(0)


def test_number_classes():
    assert is_hajos_number(36)
    assert not is_cbc_hajos_number(36)
    assert not is_hajos_number(72)
    assert is_cbc_hajos_number(48)
    assert [n for n in range(1, 73) if not is_cbc_hajos_number(n)] == [36, 60, 72]


def test_factorizations_of_z4():
    pairs = enumerate_factorizations(4)
    assert pairs
    assert all(is_factorization(pair.P, pair.Q, 4) for pair in pairs)
    assert all(0 in pair.P and 0 in pair.Q for pair in pairs)
    assert FactorizationPair.of(4, [0, 2], [0, 1]) in pairs


def test_periods():
    S = ResidueSet.of(12, [0, 2, 6, 8])
    assert periods(S).elements == (0, 6)
    assert periods(ResidueSet.of(6, [0, 1, 3])).elements == (0,)


def test_extend_to_factorization():
    verdict = extend_to_factorization([0, 1], [0], 4)
    assert verdict.holds
    pair = verdict.certificate
    assert {0, 1} <= set(pair.P.elements)
    assert is_factorization(pair.P, pair.Q, 4)
    assert not extend_to_factorization([0, 1], [0, 2], 5).holds
    with pytest.raises(EnvelopeExceededError):
        extend_to_factorization([0], [0], 100, max_n=64)


def test_hajos_factorization_chain_replays():
    f = FactorizationPair.of(36, [0, 4, 8, 9, 13, 17], [0, 2, 12, 14, 24, 26])
    verdict = is_hajos_factorization(f)
    assert verdict.holds
    assert check_hajos_factorization_chain(f, verdict.certificate)


def test_krasner_factorizations_of_z4():
    found = enumerate_krasner(4)
    assert len(found) == 4
    for kf in found:
        assert is_krasner(kf.pair.P, kf.pair.Q)
        assert is_factorization(kf.pair.P, kf.pair.Q, 4)
        assert check_krasner_chain(kf.pair, kf.chain)
    with pytest.raises(EnvelopeExceededError):
        enumerate_krasner(128, max_n=64)


def test_krasner_rejects_non_krasner_factorization():
    assert not is_krasner(ResidueSet.of(6, [0, 2, 4]), ResidueSet.of(6, [0, 3]))
    assert is_factorization([0, 2, 4], [0, 3], 6)


def test_restivo_pair():
    left, right = extract_restivo_pair(["aaaaa", "ab", "b", "baa"], 5)
    assert left.elements == (0, 1)
    assert right.elements == (0, 2)
