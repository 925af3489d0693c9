import logging
from typing import Iterable, List, Union

from src.errors import InvalidInputError
from src.models.borders import Border
from src.models.cbc import BayonetSet, CbcFamily
from src.models.cyclic import FactorizationPair, ResidueSet

logger = logging.getLogger(__name__)

IntsLike = Union[ResidueSet, Iterable[int]]


def _reduced(values: IntsLike, n: int) -> List[int]:
    """Elements mod n, keeping repetitions so a collapsing set fails the count"""
    if isinstance(values, ResidueSet):
        return list(values.elements)
    return [value % n for value in set(values)]


def border_check(P: IntsLike, Q: IntsLike, X: BayonetSet) -> bool:
    """
    a^P X a^Q covers every cell of [n] x [n] exactly once, exponents mod n
    """
    n = X.n
    left, right = _reduced(P, n), _reduced(Q, n)
    if len(left) * len(right) * len(X) != n * n:
        return False
    covered = 0
    for i, j in X.pairs:
        for p in left:
            row = ((i + p) % n) * n
            for q in right:
                bit = 1 << (row + (j + q) % n)
                if covered & bit:
                    return False
                covered |= bit
    return covered == (1 << (n * n)) - 1


def border_check_family(P: IntsLike, Q: IntsLike, family: Union[CbcFamily, Iterable[BayonetSet]]) -> bool:
    members = family.members if isinstance(family, CbcFamily) else list(family)
    return all(border_check(P, Q, member) for member in members)


def borders(bd: Union[Border, FactorizationPair], X: BayonetSet) -> bool:
    if bd.n != X.n:
        raise InvalidInputError(f"Border of size {bd.n} cannot border an {X.n}-cbc")
    return border_check(bd.P, bd.Q, X)


def right_of_shifted(X: BayonetSet, P: IntsLike, k: int) -> ResidueSet:
    """R^k(a^P X) = {j : a^k b a^j in a^P X, exponents mod n}"""
    n = X.n
    left = _reduced(P, n)
    return ResidueSet.of(n, {j for i, j in X.pairs for p in left if (i + p) % n == k})


def left_of_shifted(Y: BayonetSet, Q: IntsLike, k: int) -> ResidueSet:
    """L^k(Y a^Q) = {i : a^i b a^k in Y a^Q, exponents mod n}"""
    n = Y.n
    right = _reduced(Q, n)
    return ResidueSet.of(n, {i for i, j in Y.pairs for q in right if (j + q) % n == k})
