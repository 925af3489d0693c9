import logging
from math import gcd
from typing import List, Union

from src.borders.checks import border_check, border_check_family, left_of_shifted, right_of_shifted
from src.cbc.closure import stable_closure
from src.config import DEFAULT_STABLE_CLOSURE_CAP
from src.cyclic.factorizations import is_factorization
from src.errors import ConsistencyError, InvalidInputError, PreconditionError
from src.models.borders import BordanteCandidate, Border
from src.models.cbc import BayonetSet, Cbc, CbcFamily
from src.models.cyclic import FactorizationPair, ResidueSet

logger = logging.getLogger(__name__)

BorderLike = Union[Border, FactorizationPair]


def as_border(bd: BorderLike) -> Border:
    if isinstance(bd, FactorizationPair):
        return Border.from_factorization(bd)
    return bd


def translate_border(bd: BorderLike, i: int, j: int) -> Border:
    """(P + i, Q + j); values are kept as integers, not reduced"""
    bd = as_border(bd)
    return Border.of(bd.n, (p + i for p in bd.P), (q + j for q in bd.Q))


def scale_border(bd: BorderLike, d1: int, d2: int) -> Border:
    """(d1 P, d2 Q) for d1 prime to |P| and d2 prime to |Q|"""
    bd = as_border(bd)
    if gcd(d1, len(bd.P)) != 1:
        raise PreconditionError(f"d1 = {d1} is not prime to |P| = {len(bd.P)}")
    if gcd(d2, len(bd.Q)) != 1:
        raise PreconditionError(f"d2 = {d2} is not prime to |Q| = {len(bd.Q)}")
    return Border.of(bd.n, (d1 * p for p in bd.P), (d2 * q for q in bd.Q))


def border_from_dual(bd: BorderLike) -> Border:
    """(Q, P), which borders dual(X) whenever (P, Q) borders X"""
    bd = as_border(bd)
    return Border(bd.n, bd.Q, bd.P)


def canonical_coprime_border(X: BayonetSet, bd: BorderLike) -> FactorizationPair:
    """(q[p], p[q]) for a border of X with coprime sizes p = |P|, q = |Q|"""
    bd = as_border(bd)
    p, q = len(bd.P), len(bd.Q)
    if gcd(p, q) != 1:
        raise PreconditionError(f"|P| = {p} and |Q| = {q} are not coprime")
    if not border_check(bd.P, bd.Q, X):
        raise PreconditionError(f"{bd} does not border {X}")
    n = X.n
    pair = FactorizationPair.of(n, (q * k for k in range(p)), (p * k for k in range(q)))
    if not (is_factorization(pair.P, pair.Q, n) and border_check(pair.P, pair.Q, X)):
        raise ConsistencyError(f"{pair} should be a factorization bordering {X}")
    return pair


def cbc_from_factorization(f: FactorizationPair) -> Cbc:
    """a^Q b a^P, which (P, Q) borders"""
    if not is_factorization(f.P, f.Q, f.n):
        raise PreconditionError(f"{f} is not a factorization of Z_{f.n}")
    return Cbc.from_pairs(f.n, ((q, p) for q in f.Q.elements for p in f.P.elements))


def bordante_factorizations(family: CbcFamily, bd: BorderLike, X: BayonetSet, Y: BayonetSet,
                            k1: int, k2: int,
                            closure_cap: int = DEFAULT_STABLE_CLOSURE_CAP) -> List[BordanteCandidate]:
    """
    The three factorizations derived from a border of the stable closure

    (P, L^k2(Y a^Q)), (R^k1(a^P X), L^k2(Y a^Q)) and (R^k1(a^P X), Q), each
    checked to be a factorization bordering the closure.
    """
    bd = as_border(bd)
    n = family.n
    if not 0 <= k1 < n or not 0 <= k2 < n:
        raise InvalidInputError(f"k1, k2 must lie in [0, {n})")
    stable = stable_closure(family, closure_cap)
    if X not in stable or Y not in stable:
        raise PreconditionError("X and Y must belong to the stable closure")
    if not border_check_family(bd.P, bd.Q, stable):
        raise PreconditionError(f"{bd} does not border the stable closure")

    P = ResidueSet.reduced(n, bd.P)
    Q = ResidueSet.reduced(n, bd.Q)
    right = right_of_shifted(X, bd.P, k1)
    left = left_of_shifted(Y, bd.Q, k2)
    candidates = []
    for label, (first, second) in (("P,L", (P, left)), ("R,L", (right, left)), ("R,Q", (right, Q))):
        pair = FactorizationPair(n, first, second)
        candidate = BordanteCandidate(
            label=label,
            pair=pair,
            is_factorization=is_factorization(first, second, n),
            borders_family=border_check_family(first, second, stable),
        )
        if not (candidate.is_factorization and candidate.borders_family):
            raise ConsistencyError(f"Derived pair {label} = {pair} fails on the stable closure")
        candidates.append(candidate)
    return candidates
