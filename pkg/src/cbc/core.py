import logging
from typing import Iterable, List, Tuple, Union

from src.cbc.compatibility import incompatibility_certificate, member_adjacency, zero_cycle_free
from src.errors import InvalidInputError, PreconditionError
from src.models.cbc import BayonetSet, Cbc, Pair, encode_pairs
from src.models.cyclic import ResidueSet, full_mask
from src.models.verdicts import Verdict

logger = logging.getLogger(__name__)

PairsLike = Union[BayonetSet, Iterable[Pair]]


def as_bayonet_set(n: int, pairs: PairsLike) -> BayonetSet:
    if isinstance(pairs, BayonetSet):
        if pairs.n != n:
            raise InvalidInputError(f"Set has modulus {pairs.n}, expected {n}")
        return pairs
    return BayonetSet(n, encode_pairs(n, pairs))


def row_masks(X: BayonetSet) -> List[int]:
    """rows[i] is the mask of right exponents j with (i, j) in X"""
    n = X.n
    row_mask = full_mask(n)
    return [(X.mask >> (i * n)) & row_mask for i in range(n)]


def is_cbc(n: int, pairs: PairsLike) -> Verdict:
    """
    n pairs whose words form, with a^n, a code

    Codehood is read off the compatibility graph of the singleton family:
    {a^n} + X is a code exactly when no nonempty path leads from 0 back to 0.
    """
    X = as_bayonet_set(n, pairs)
    if len(X) != n:
        return Verdict.no(reason=f"{len(X)} pairs given, an {n}-cbc has {n}")
    if zero_cycle_free(member_adjacency(X), n):
        return Verdict.yes()
    certificate = incompatibility_certificate([X], n)
    return Verdict.no(certificate, reason="{a^n} together with the words is not a code")


def make_cbc(n: int, pairs: PairsLike) -> Cbc:
    """Validated Cbc, raising PreconditionError with the reason otherwise"""
    X = as_bayonet_set(n, pairs)
    if isinstance(X, Cbc):
        return X
    verdict = is_cbc(n, X)
    if not verdict.holds:
        certificate = verdict.certificate.to_dict() if verdict.certificate else None
        raise PreconditionError(f"{X} is not an {n}-cbc: {verdict.reason}", certificate)
    return Cbc(X.n, X.mask)


def compose(X: BayonetSet, Y: BayonetSet, r: int) -> BayonetSet:
    """X o_r Y = {(i, l) : (i, j) in X, (k, l) in Y, j + k = r mod n}"""
    if X.n != Y.n:
        raise InvalidInputError(f"Cannot compose sets with moduli {X.n} and {Y.n}")
    n = X.n
    if not 0 <= r < n:
        raise InvalidInputError(f"Residue {r} is not in [0, {n})")
    rows = row_masks(Y)
    mask = 0
    for i, j in X.pairs:
        mask |= rows[(r - j) % n] << (i * n)
    return BayonetSet(n, mask)


def dual(X: BayonetSet) -> BayonetSet:
    """a^j b a^i for every a^i b a^j of X"""
    swapped = BayonetSet(X.n, encode_pairs(X.n, ((j, i) for i, j in X.pairs)))
    if isinstance(X, Cbc):
        return Cbc(swapped.n, swapped.mask)
    return swapped


def left_set(X: BayonetSet) -> ResidueSet:
    return ResidueSet.of(X.n, {i for i, _ in X.pairs})


def right_of(X: BayonetSet, k: int) -> ResidueSet:
    """Right exponents of the words of X with left exponent k"""
    row = row_masks(X)[k] if 0 <= k < X.n else 0
    if not row:
        raise PreconditionError(f"{k} is not in L(X) = {left_set(X)}")
    return ResidueSet(X.n, row)


def right_classes(X: BayonetSet) -> Tuple[ResidueSet, ...]:
    """Distinct sets R^k(X), k in L(X), sorted by their elements"""
    classes = {ResidueSet(X.n, row) for row in row_masks(X) if row}
    return tuple(sorted(classes, key=lambda S: S.elements))


def identity_cbc(n: int, k: int) -> Cbc:
    """{a^((k - i) mod n) b a^i}, neutral for o_k"""
    return Cbc(n, encode_pairs(n, (((k - i) % n, i) for i in range(n))))


def triangle_property(X: BayonetSet) -> Verdict:
    """At most k words of length <= k for every k < n; |a^i b a^j| = i + j + 1"""
    n = X.n
    lengths = sorted(i + j + 1 for i, j in X.pairs)
    for k in range(n):
        count = sum(1 for length in lengths if length <= k)
        if count > k:
            return Verdict.no({"k": k, "count": count}, reason=f"{count} words of length <= {k}")
    return Verdict.yes()
