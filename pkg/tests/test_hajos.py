import random

import pytest

from src.cbc.core import is_cbc, make_cbc
from src.cbc.enumeration import count_cbc, enumerate_cbc
from src.errors import InvalidInputError, PreconditionError
from src.hajos.counterexample import build_non_hajos_cbc, non_hajos_sets
from src.hajos.expansion import (UNIT, chain_border, expand_ht, is_right_periodic, lift_border,
                                 random_hajos_cbc, reduce_mod, replay_hajos_chain)
from src.hajos.recognition import (count_hajos_prime, is_hajos_cbc, is_hajos_family,
                                   krasner_border_equivalence, krasner_border_of, periodicity_criterion)
from src.models.borders import Border
from src.models.cbc import BayonetSet, CbcFamily
from src.models.hajos import FamilyHajosStep, HtParams, NonHajosSpec, Side
from src.models.verdicts import VerdictStatus


def test_expand_unit():
    expanded = expand_ht(HtParams(UNIT, 4, ((0, 0, 1, 3),)))
    assert expanded == BayonetSet.from_pairs(4, [(0, 0), (0, 1), (1, 2), (3, 3)])
    with pytest.raises(InvalidInputError):
        HtParams(UNIT, 2, ((0, 2),))


def test_right_periodic_reads_back_shifts(four_cbc):
    verdict = is_right_periodic(four_cbc, 1)
    assert verdict.holds
    assert verdict.certificate.shifts == ((0, 0, 1, 3),)
    assert not is_right_periodic(four_cbc, 2).holds
    assert reduce_mod(four_cbc, 2) == BayonetSet.from_pairs(2, [(0, 0), (0, 1), (1, 0), (1, 1)])


def test_hajos_chain_of_eight_cbc(eight_cbc):
    verdict = is_hajos_cbc(eight_cbc)
    assert verdict.holds
    steps = verdict.certificate.steps
    assert [(step.t, step.side) for step in steps] == [(2, Side.DUAL), (4, Side.DUAL)]
    assert steps[0].base == BayonetSet.from_pairs(4, [(0, 0), (1, 0), (2, 1), (3, 3)])
    assert steps[0].shifts == ((0, 0), (0, 0), (0, 0), (0, 1))
    assert steps[1].shifts == ((0, 0, 1, 3),)
    assert steps[1].base == UNIT
    assert replay_hajos_chain(verdict.certificate) == eight_cbc


def test_chain_border_borders_target(eight_cbc):
    border = chain_border([(2, Side.DUAL), (4, Side.DUAL)])
    assert border == Border.of(8, [0, 1, 2, 3], [0, 4])
    assert krasner_border_of(eight_cbc) is not None


def test_lift_border():
    assert lift_border(Border.of(4, [0, 1], [0, 2]), 4, 2) == Border.of(8, [0, 1, 4, 5], [0, 2])


def test_random_hajos_cbc_replays():
    for seed in range(5):
        Y, chain = random_hajos_cbc(12, random.Random(seed))
        assert is_cbc(12, Y).holds
        assert replay_hajos_chain(chain) == Y
        assert is_hajos_cbc(Y).holds


def test_prime_cbc_are_hajos():
    assert count_hajos_prime(3) == count_cbc(3) == 48
    assert all(is_hajos_cbc(X).holds for X in enumerate_cbc(3))
    with pytest.raises(InvalidInputError):
        count_hajos_prime(4)


def test_hajos_family(eight_cbc, four_cbc):
    verdict = is_hajos_family(CbcFamily.of([eight_cbc]))
    assert verdict.holds
    assert verdict.certificate.shared
    memberwise = is_hajos_family([four_cbc], shared=False)
    assert memberwise.holds
    assert memberwise.certificate.steps == (FamilyHajosStep(4, Side.DIRECT),)


def test_hajos_family_needs_compatibility():
    X = make_cbc(2, [(0, 0), (1, 0)])
    Y = make_cbc(2, [(0, 0), (0, 1)])
    with pytest.raises(PreconditionError):
        is_hajos_family([X, Y])


def test_periodicity_criterion(four_cbc):
    assert periodicity_criterion([four_cbc], [0], 1, [0])
    with pytest.raises(PreconditionError):
        periodicity_criterion([four_cbc], [0], 3, [0])


def test_krasner_border_equivalence(four_cbc):
    verdict = krasner_border_equivalence([four_cbc])
    assert verdict.holds
    assert "krasner" in verdict.certificate
    assert verdict.certificate["chain_border"] == {"n": 4, "P": [0, 1, 2, 3], "Q": [0]}


def test_non_hajos_sets():
    L, R1, R2 = non_hajos_sets(NonHajosSpec(2, 2, 3, 3))
    assert L == [0, 4, 8, 9, 13, 17]
    assert R1 == [0, 2, 12, 14, 24, 26]
    assert R2 == [0, 3, 6, 18, 21, 24]


def test_non_hajos_cbc():
    bundle = build_non_hajos_cbc(NonHajosSpec(2, 2, 3, 3))
    assert bundle.all_passed, bundle.failed_checks()
    assert bundle.cbc.n == 36
    assert is_hajos_cbc(bundle.cbc).status is VerdictStatus.NO


@pytest.mark.slow
def test_non_hajos_cbc_has_no_krasner_border():
    bundle = build_non_hajos_cbc(NonHajosSpec(2, 2, 3, 3))
    verdict = krasner_border_equivalence([bundle.cbc])
    assert verdict.status is VerdictStatus.NO


def test_non_hajos_spec_validation():
    with pytest.raises(PreconditionError):
        build_non_hajos_cbc(NonHajosSpec(2, 2, 4, 3))
    with pytest.raises(PreconditionError):
        build_non_hajos_cbc(NonHajosSpec(2, 3, 3, 2))
