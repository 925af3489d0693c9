import pytest

from src.cbc.core import make_cbc
from src.errors import InvalidInputError, PreconditionError, UnsupportedInstanceError
from src.models.borders import Border
from src.models.cbc import BayonetSet, CbcFamily
from src.models.transforms import Direction, PrefixSuffixChain
from src.models.verdicts import VerdictStatus
from src.models.words import AmbiguityWitness, FiniteCode
from src.transforms.completion import build_prefix_suffix_expansion, complete_hajos
from src.transforms.inclusion import (IN_CBC, IN_HAJOS_CBC, MAXIMAL, PREFIX_SUFFIX, inclusion_equivalence,
                                      split_around)
from src.transforms.phi_mu import divisibility_analysis, mu, mu_phi_bridge, phi, phi_closure_check
from src.transforms.prefix_suffix import is_prefix_suffix, mirror_chain, restrict_chain, validate_chain

LETTERS = FiniteCode.from_words(["a", "b"])


def code(*words):
    return FiniteCode.from_words(words)


def test_phi_image(four_cbc):
    assert phi(four_cbc, 1, 3) == BayonetSet.from_pairs(4, [(0, 0), (0, 3), (1, 2), (3, 1)])
    assert phi(four_cbc, 1, 2) == BayonetSet.from_pairs(4, [(0, 0), (0, 2), (1, 0), (3, 2)])


def test_phi_closure_check(four_cbc):
    family = CbcFamily.of([four_cbc])
    bd = Border.of(4, [0, 1, 2, 3], [0])
    verdict = phi_closure_check(family, bd, four_cbc, 1, 3)
    assert verdict.holds
    with pytest.raises(PreconditionError):
        phi_closure_check(family, bd, four_cbc, 1, 2)


def test_mu_stretches_exponents():
    assert mu(["aba", "b"], 2, 3).words == ("b", "aabaaa")
    with pytest.raises(InvalidInputError):
        mu(["b"], 0, 1)


def test_divisibility_analysis(stretched_pairs):
    report = divisibility_analysis(stretched_pairs, 5)
    assert report.left_forced_primes == (2, 3)
    assert report.right_forced_primes == (2, 3)
    assert report.n_divisor == 36
    for d, witness in report.right_witnesses.items():
        assert witness.verify(mu(stretched_pairs, 1, d).words)
    for d, witness in report.left_witnesses.items():
        assert witness.verify(mu(stretched_pairs, d, 1).words)


def test_mu_phi_bridge():
    witness = AmbiguityWitness(("ba", "b"), ("b", "ab"))
    assert mu_phi_bridge(witness, 2) == witness


def test_letters_are_prefix_suffix():
    verdict = is_prefix_suffix(["a", "b"])
    assert verdict.holds
    assert verdict.certificate.depth == 0


def test_two_step_prefix_suffix_code():
    top = code("aa", "ab", "abbab", "bbaa")
    verdict = is_prefix_suffix(top)
    assert verdict.holds
    assert verdict.certificate.depth == 2
    assert validate_chain(verdict.certificate)
    chain = PrefixSuffixChain((top, code("aa", "ab", "bab", "bbaa"), LETTERS),
                              (Direction.SUFFIX, Direction.PREFIX))
    assert validate_chain(chain)
    assert validate_chain(mirror_chain(chain))
    assert not validate_chain(PrefixSuffixChain((top, LETTERS), (Direction.PREFIX,)))


def test_code_without_prefix_suffix_chain():
    verdict = is_prefix_suffix(["aaab", "aaba", "b", "ba"])
    assert verdict.status is VerdictStatus.NO


def test_split_cap_gives_unknown():
    verdict = is_prefix_suffix(["aaab", "aaba", "b", "ba"], split_cap=1)
    assert verdict.status is VerdictStatus.UNKNOWN


def test_prefix_suffix_needs_a_code():
    with pytest.raises(PreconditionError):
        is_prefix_suffix(["a", "ab", "b"])


def test_restrict_chain():
    top = code("aa", "ab", "abbab", "bbaa")
    chain = PrefixSuffixChain((top, code("aa", "ab", "bab", "bbaa"), LETTERS),
                              (Direction.SUFFIX, Direction.PREFIX))
    restricted = restrict_chain(chain, ["ab", "abbab"])
    assert validate_chain(restricted)
    with pytest.raises(InvalidInputError):
        restrict_chain(chain, ["bb"])


def test_expansion_of_letters():
    result = build_prefix_suffix_expansion(["a", "b"], 1, 2)
    assert result.code == code("aa", "b", "ba")
    assert result.chain.levels == (result.code, LETTERS)
    assert result.chain.directions == (Direction.SUFFIX,)

    stretched = build_prefix_suffix_expansion(["a", "b"], 1, 2, j_params={"b": [1, 0]})
    assert stretched.code == code("aa", "ba", "baa")
    assert stretched.chain.depth == 2
    assert validate_chain(stretched.chain)


def test_expansion_needs_power_of_a():
    with pytest.raises(PreconditionError):
        build_prefix_suffix_expansion(["b", "ab"], 2, 2)


def test_complete_single_step(four_cbc):
    result = complete_hajos(CbcFamily.of([four_cbc]), ["a", "b"], {"b": four_cbc.pairs})
    assert result.code == code("aaaa", "b", "ba", "abaa", "aaabaaa")
    assert result.chain.levels == (result.code, LETTERS)
    assert result.chain.directions == (Direction.SUFFIX,)


def test_complete_with_long_exponents(four_cbc):
    result = complete_hajos(CbcFamily.of([four_cbc]), ["a", "b"], {"b": [(0, 0), (0, 5), (1, 2), (3, 3)]})
    assert result.code == code("aaaa", "b", "baaaaa", "abaa", "aaabaaa")
    assert result.chain.depth == 2
    assert validate_chain(result.chain)


def test_complete_dual_step():
    Y = make_cbc(4, [(0, 0), (1, 0), (2, 1), (3, 0)])
    result = complete_hajos(CbcFamily.of([Y]), ["a", "b"], {"b": Y.pairs})
    assert result.code == code("aaaa", "b", "ab", "aaba", "aaab")
    assert result.chain.directions == (Direction.PREFIX,)
    assert validate_chain(result.chain)


def test_complete_rejects_foreign_set(four_cbc):
    with pytest.raises(PreconditionError):
        complete_hajos(CbcFamily.of([four_cbc]), ["a", "b"], {"b": [(0, 0), (1, 1), (2, 2), (3, 3)]})
    with pytest.raises(InvalidInputError):
        complete_hajos(CbcFamily.of([four_cbc]), ["a", "b"], {"c": four_cbc.pairs})


def test_split_around():
    assert split_around("aabaaa", "b") == (2, 3)
    assert split_around("abba", "bb") == (1, 1)
    assert split_around("aba", "ab") == (0, 1)
    with pytest.raises(InvalidInputError):
        split_around("bab", "b")


def test_inclusion_positive():
    report = inclusion_equivalence(["b", "ab", "aaba", "aaab"], "b", 4)
    assert report.agree
    assert report.overall is VerdictStatus.YES
    for statement in (IN_CBC, IN_HAJOS_CBC, PREFIX_SUFFIX, MAXIMAL):
        assert report.statuses[statement] is VerdictStatus.YES
    chain = PrefixSuffixChain.from_dict(report.evidence[PREFIX_SUFFIX]["chain"])
    assert validate_chain(chain)


def test_inclusion_negative():
    report = inclusion_equivalence(["ab", "b", "baa"], "b", 5)
    assert report.agree
    assert report.overall is VerdictStatus.NO
    for statement in (IN_CBC, IN_HAJOS_CBC, PREFIX_SUFFIX, MAXIMAL):
        assert report.statuses[statement] is VerdictStatus.NO


def test_inclusion_past_enumeration_envelope():
    report = inclusion_equivalence(["b", "ab", "aaba", "aaab"], "b", 4, max_n=3)
    assert report.statuses[IN_CBC] is VerdictStatus.UNKNOWN
    assert report.statuses[PREFIX_SUFFIX] is VerdictStatus.YES
    assert report.overall is VerdictStatus.YES


def test_inclusion_rejects_unsupported_instances():
    with pytest.raises(UnsupportedInstanceError):
        inclusion_equivalence(["b"], "b", 36)
    with pytest.raises(PreconditionError):
        inclusion_equivalence(["aa"], "a", 4)
