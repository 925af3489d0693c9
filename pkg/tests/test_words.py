import pytest

from src.errors import InvalidInputError
from src.models.words import FiniteCode, bayonet_word, parse_bayonet
from src.words.codes import factorize, is_code, is_prefix_set, is_suffix_set, reverse_code, substitute


def test_ambiguous_set_has_shortest_witness():
    verdict = is_code(["aabb", "abaaa", "b", "ba"])
    assert not verdict.holds
    witness = verdict.certificate
    assert witness.verify(["aabb", "abaaa", "b", "ba"])
    assert witness.word == "babaaabb"


def test_prefix_and_suffix_sets_are_codes():
    assert is_code(["a", "ba", "bb"]).holds
    assert is_code(["a", "ab", "bb"]).holds
    assert is_prefix_set(["a", "ba", "bb"])
    assert not is_suffix_set(["a", "ba", "bb"])
    assert is_suffix_set(["a", "ab", "bb"])


def test_code_that_is_neither_prefix_nor_suffix():
    words = ["aabb", "abaaa", "b", "ba"]
    assert not is_prefix_set(words)
    assert is_code(["aaaaa", "ab", "b", "baa"]).holds


def test_simple_ambiguity():
    verdict = is_code(["a", "ab", "b"])
    assert not verdict.holds
    assert verdict.certificate.word == "ab"


def test_empty_word_rejected():
    with pytest.raises(InvalidInputError):
        is_code(["", "a"])
    with pytest.raises(InvalidInputError):
        FiniteCode.from_words(["aB"])


def test_bayonet_words():
    assert bayonet_word(2, 1) == "aaba"
    assert parse_bayonet("aaba") == (2, 1)
    assert parse_bayonet("c", letter="c") == (0, 0)
    with pytest.raises(InvalidInputError):
        parse_bayonet("abab")


def test_substitute_and_factorize():
    assert substitute(["b", "aba"], "bb").words == ("bb", "abba")
    assert factorize("abbab", ["ab", "bab"]) == ("ab", "bab")
    assert factorize("bb", ["ab"]) is None


def test_reverse_code():
    assert reverse_code(["ab", "aab"]).words == ("ba", "baa")
    assert FiniteCode.from_words(["ba", "b", "ab"]).words == ("b", "ab", "ba")


def test_reverse_code_matches_finite_code_reversal():
    code = FiniteCode.from_words(["aab", "abba", "b"])
    assert reverse_code(code) == code.reversed()
    assert reverse_code(list(code.words)) == code.reversed()
    assert reverse_code(code.reversed()) == code
