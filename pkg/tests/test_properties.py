"""Exhaustive and seeded random sweeps over small moduli"""

import random
from collections import defaultdict
from itertools import combinations, product
from math import gcd

import pytest

from src.borders.checks import border_check_family
from src.borders.discovery import find_border
from src.cbc.closure import stable_closure
from src.cbc.core import compose, identity_cbc, is_cbc, triangle_property
from src.cbc.enumeration import enumerate_cbc
from src.cyclic.factorizations import enumerate_factorizations, periods
from src.cyclic.krasner import enumerate_krasner
from src.cyclic.numbers import prime_factors
from src.hajos.expansion import random_hajos_cbc
from src.hajos.recognition import is_hajos_cbc, krasner_border_equivalence
from src.models.cbc import BayonetSet, CbcFamily
from src.models.words import bayonet_word
from src.transforms.phi_mu import phi_closure_check
from src.words.codes import is_code

pytestmark = pytest.mark.slow


def factorization_count(word, words):
    """Number of ways to write word as a product of words"""
    counts = [1] + [0] * len(word)
    for end in range(1, len(word) + 1):
        for w in words:
            if len(w) <= end and word[end - len(w):end] == w:
                counts[end] += counts[end - len(w)]
    return counts[-1]


def ambiguous_up_to(words, length):
    for size in range(1, length + 1):
        for letters in product("ab", repeat=size):
            if factorization_count("".join(letters), words) > 1:
                return True
    return False


def test_is_code_against_factorization_counts():
    rng = random.Random(7)
    for _ in range(300):
        size = rng.randint(2, 4)
        words = sorted({"".join(rng.choice("ab") for _ in range(rng.randint(1, 3))) for _ in range(size)})
        verdict = is_code(words)
        if verdict.holds:
            assert not ambiguous_up_to(words, 8), words
        else:
            witness = verdict.certificate
            assert witness.verify(words), words
            assert factorization_count(witness.word, words) > 1


def test_is_cbc_matches_codehood_of_expansion():
    rng = random.Random(11)
    cells = {n: [(i, j) for i in range(n) for j in range(n)] for n in range(2, 6)}
    draws = [(n, pairs) for n in (2, 3, 4) for pairs in combinations(cells[n], n)]
    draws += [(5, tuple(rng.sample(cells[5], 5))) for _ in range(300)]
    for n, pairs in draws:
        words = ["a" * n] + [bayonet_word(i, j) for i, j in pairs]
        assert is_cbc(n, pairs).holds == is_code(words).holds, (n, pairs)


def test_identity_composition_for_small_cbc():
    for n in (2, 3):
        for X in enumerate_cbc(n):
            for k in range(n):
                identity = identity_cbc(n, k)
                assert compose(identity, X, k) == X
                assert compose(X, identity, k) == X


def test_composition_is_associative():
    rng = random.Random(3)
    two = list(enumerate_cbc(2))
    triples = [(2, triple) for triple in product(two, repeat=3)]
    for n in (3, 4):
        members = list(enumerate_cbc(n))
        triples += [(n, tuple(rng.choice(members) for _ in range(3))) for _ in range(150)]
    for n, (X, Y, Z) in triples:
        for r1, r2 in product(range(n), repeat=2):
            assert compose(compose(X, Y, r1), Z, r2) == compose(X, compose(Y, Z, r2), r1)


def test_small_cbc_are_hajos_and_satisfy_triangle():
    for n in range(2, 6):
        for X in enumerate_cbc(n):
            assert triangle_property(X).holds, X
            assert is_hajos_cbc(X).holds, X


def test_krasner_borders_match_hajos_on_singletons():
    for n in range(2, 5):
        for X in enumerate_cbc(n):
            assert krasner_border_equivalence([X]).holds, X
    rng = random.Random(5)
    for n in (6, 8):
        for _ in range(20):
            X, _ = random_hajos_cbc(n, rng)
            assert krasner_border_equivalence([X]).holds, X


def test_phi_keeps_families_bordered():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(2, 8)
        X, _ = random_hajos_cbc(n, rng)
        stable = stable_closure(CbcFamily.of([X]))
        border = rng.choice(find_border(stable).factorizations)
        assert border_check_family(border.P, border.Q, stable)
        d1 = rng.choice([d for d in range(1, 2 * n) if gcd(d, len(border.Q)) == 1])
        d2 = rng.choice([d for d in range(1, 2 * n) if gcd(d, len(border.P)) == 1])
        verdict = phi_closure_check(CbcFamily.of([X]), border, X, d1, d2)
        assert verdict.holds, (X, border, d1, d2, verdict.reason)


def test_krasner_periods_propagate():
    for n in range(2, 13):
        factorizations = enumerate_factorizations(n)
        for kf in enumerate_krasner(n):
            U, V = kf.pair.P, kf.pair.Q
            for m in periods(U).elements[1:]:
                for pair in factorizations:
                    if pair.Q == V:
                        assert pair.P.is_periodic(m), (kf.pair, pair, m)


def test_prime_power_side_is_periodic_or_partners_share_a_period():
    for n in range(2, 17):
        partners = defaultdict(list)
        for pair in enumerate_factorizations(n):
            partners[pair.P].append(pair.Q)
        for P, Qs in partners.items():
            if len(set(prime_factors(len(P)))) > 1 or periods(P).elements[1:]:
                continue
            for Q1, Q2 in product(Qs, repeat=2):
                common = set(periods(Q1).elements[1:]) & set(periods(Q2).elements[1:])
                assert common, (n, P, Q1, Q2)


def test_expansions_of_random_hajos_cbc_are_codes():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.choice((4, 6, 8, 9, 12))
        X, _ = random_hajos_cbc(n, rng)
        assert isinstance(X, BayonetSet)
        assert is_code(["a" * n, *X.words()]).holds
