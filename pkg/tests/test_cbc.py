import pytest

from src.cbc.closure import is_stable, stable_closure
from src.cbc.compatibility import compatibility_graph, is_compatible, shortest_zero_cycle, to_networkx
from src.cbc.core import (compose, dual, identity_cbc, is_cbc, left_set, make_cbc, right_classes, right_of,
                          triangle_property)
from src.cbc.enumeration import count_cbc, enumerate_cbc, joint_embeddability
from src.cbc.omega import c_of_omega, maximality_sweep, residue_pairs
from src.errors import EnvelopeExceededError, PreconditionError
from src.models.cbc import BayonetSet, Cbc, CbcFamily
from src.models.verdicts import VerdictStatus


def test_eight_cbc_is_cbc(eight_cbc):
    assert is_cbc(8, eight_cbc).holds
    assert left_set(eight_cbc).elements == (0, 1, 3, 4, 5, 7)
    assert right_of(eight_cbc, 0).elements == (0, 1)
    assert len(right_classes(eight_cbc)) == 4


def test_non_cbc_has_witness():
    verdict = is_cbc(3, [(0, 0), (1, 0), (0, 1)])
    assert not verdict.holds
    certificate = verdict.certificate
    assert certificate.path[0] == 0 and certificate.path[-1] == 0
    assert certificate.witness.verify(certificate.code)
    with pytest.raises(PreconditionError):
        make_cbc(3, [(0, 0), (1, 0), (0, 1)])


def test_wrong_size_is_not_cbc():
    assert not is_cbc(3, [(0, 0), (1, 0)]).holds


def test_composition():
    X = BayonetSet.from_pairs(2, [(0, 0), (0, 1)])
    Y = BayonetSet.from_pairs(2, [(0, 0), (1, 0)])
    assert compose(X, Y, 0) == BayonetSet.from_pairs(2, [(0, 0)])


def test_identity_is_neutral(eight_cbc):
    for k in (0, 3):
        identity = identity_cbc(8, k)
        assert compose(identity, eight_cbc, k) == eight_cbc
        assert compose(eight_cbc, identity, k) == eight_cbc


def test_dual_is_involution(eight_cbc):
    assert dual(dual(eight_cbc)) == eight_cbc
    assert isinstance(dual(eight_cbc), Cbc)
    assert is_cbc(8, dual(eight_cbc)).holds


def test_triangle_property(eight_cbc):
    assert triangle_property(eight_cbc).holds
    bad = BayonetSet.from_pairs(3, [(0, 0), (1, 0), (0, 1)])
    assert not triangle_property(bad).holds


def test_counts_for_primes():
    assert count_cbc(2) == 6
    assert count_cbc(3) == 48
    assert all(is_cbc(3, X).holds for X in enumerate_cbc(3))


def test_enumeration_envelope():
    with pytest.raises(EnvelopeExceededError):
        list(enumerate_cbc(7, max_n=6))


def test_incompatible_family():
    X = make_cbc(2, [(0, 0), (1, 0)])
    Y = make_cbc(2, [(0, 0), (0, 1)])
    assert is_compatible([X]).holds
    verdict = is_compatible([X, Y])
    assert not verdict.holds
    certificate = verdict.certificate
    assert certificate.path == (0, 1, 0)
    assert certificate.witness.word == "baab"
    assert certificate.witness.verify(certificate.code)
    graph = compatibility_graph([X, Y])
    assert to_networkx(graph).number_of_nodes() == 2
    assert shortest_zero_cycle(graph) == (0, 1, 0)


def test_joint_embeddability():
    verdict = joint_embeddability([[(1, 0), (1, 2)], [(2, 0), (1, 0)]], 5)
    assert verdict.status is VerdictStatus.NO
    found = joint_embeddability([[(0, 0), (1, 0)]], 3)
    assert found.holds
    assert all(BayonetSet.from_pairs(3, [(0, 0), (1, 0)]).issubset(X) for X in found.certificate)


def test_stable_closure_of_fixed_point():
    X = make_cbc(2, [(0, 0), (1, 0)])
    family = CbcFamily.of([X])
    assert is_stable(family)
    assert stable_closure(family).members == (X,)


def test_stable_closure_grows(four_cbc):
    closure = stable_closure(CbcFamily.of([four_cbc]))
    assert four_cbc in closure.members
    assert is_stable(closure)
    with pytest.raises(EnvelopeExceededError):
        stable_closure(CbcFamily.of([four_cbc]), cap=1)


def test_residue_pairs_of_maximal_code():
    M = ["aaaa", "b", "ab", "aaba", "aaab"]
    C = c_of_omega(M, 4, "b")
    assert isinstance(C, Cbc)
    assert C == BayonetSet.from_pairs(4, [(0, 0), (1, 0), (2, 1), (3, 0)])


def test_residue_pairs_of_non_maximal_code():
    M = ["aaaaa", "ab", "b", "baa"]
    assert len(residue_pairs(M, 5, "b")) == 3
    verdict = maximality_sweep(M, 5, 2)
    assert verdict.status is VerdictStatus.NO
    assert verdict.certificate["omega"] == "b"
    with pytest.raises(PreconditionError):
        c_of_omega(["ab", "b"], 5, "b")


def test_family_rejects_non_cbc_member():
    with pytest.raises(PreconditionError):
        CbcFamily.of([BayonetSet.from_pairs(2, [(0, 0)])])
    with pytest.raises(PreconditionError):
        CbcFamily.from_dict([{"n": 2, "pairs": [[0, 0], [0, 1]]}])
    family = CbcFamily.of([BayonetSet.from_pairs(2, [(0, 0), (1, 0)])])
    assert all(isinstance(member, Cbc) for member in family)


def test_stable_closure_of_finite_maximal_code():
    E = ["b", "ab", "aaaa", "aaba", "aaab", "aabb"]
    Cb = c_of_omega(E, 4, "b")
    Cbb = c_of_omega(E, 4, "bb")
    assert Cb == BayonetSet.from_pairs(4, [(0, 0), (1, 0), (2, 1), (3, 0)])
    assert Cbb == BayonetSet.from_pairs(4, [(0, 0), (1, 0), (2, 0), (3, 0)])
    closure = stable_closure(CbcFamily.of([Cb, Cbb]))
    assert set(closure.members) == {
        Cb,
        Cbb,
        BayonetSet.from_pairs(4, [(0, 1), (1, 1), (2, 0), (3, 1)]),
        BayonetSet.from_pairs(4, [(0, 1), (1, 1), (2, 1), (3, 1)]),
    }
