import logging
from typing import Iterator, List, Tuple

from src.config import DEFAULT_KRASNER_MAX_N
from src.cyclic.numbers import divisors
from src.errors import EnvelopeExceededError
from src.models.cyclic import (FactorizationPair, KrasnerChain,
                               KrasnerFactorization, ResidueSet)

logger = logging.getLogger(__name__)


def is_krasner(P: ResidueSet, Q: ResidueSet) -> bool:
    """|P||Q| = n and every k < n is an integer sum p + q"""
    n = P.n
    if Q.n != n or len(P) * len(Q) != n:
        return False
    sums = {p + q for p in P.elements for q in Q.elements}
    return all(k in sums for k in range(n))


def krasner_chains(n: int) -> Iterator[Tuple[int, ...]]:
    """Ordered factorizations of n into factors > 1, lexicographic"""
    if n == 1:
        yield ()
        return
    for first in divisors(n)[1:]:
        for rest in krasner_chains(n // first):
            yield (first,) + rest


def expand_krasner_chain(factors: Tuple[int, ...]) -> Tuple[ResidueSet, ResidueSet]:
    """
    (U, V) of a chain t_1..t_k

    Level i contributes t_1...t_{i-1}[t_i]; even levels (counting from 1)
    go to U and odd levels to V.
    """
    n = 1
    for t in factors:
        n *= t
    U, V = {0}, {0}
    stride = 1
    for level, t in enumerate(factors, start=1):
        block = [stride * k for k in range(t)]
        target = U if level % 2 == 0 else V
        target_sums = {x + y for x in target for y in block}
        target.clear()
        target.update(target_sums)
        stride *= t
    return ResidueSet.of(n, U), ResidueSet.of(n, V)


def enumerate_krasner(n: int, max_n: int = DEFAULT_KRASNER_MAX_N) -> List[KrasnerFactorization]:
    """Every Krasner factorization of size n once, with one chain producing it"""
    if n > max_n:
        raise EnvelopeExceededError(f"Krasner enumeration supports n <= {max_n}", max_n, n)
    seen = set()
    result = []
    for factors in krasner_chains(n):
        U, V = expand_krasner_chain(factors)
        for swapped, (P, Q) in ((False, (U, V)), (True, (V, U))):
            key = (P.mask, Q.mask)
            if key in seen:
                continue
            seen.add(key)
            result.append(KrasnerFactorization(FactorizationPair(n, P, Q), KrasnerChain(factors, swapped)))
    logger.debug(f"{len(result)} Krasner factorizations of size {n}")
    return result


def check_krasner_chain(pair: FactorizationPair, chain: KrasnerChain) -> bool:
    """Expanding the chain reproduces the stored pair"""
    U, V = expand_krasner_chain(chain.factors)
    expected = (V, U) if chain.swapped else (U, V)
    return U.n == pair.n and expected == (pair.P, pair.Q)
