import logging
from math import gcd
from typing import Iterable, Optional, Tuple, Union

from src.borders.checks import border_check_family
from src.borders.transforms import BorderLike, as_border
from src.cbc.closure import stable_closure
from src.cbc.compatibility import (align_with_powers, incompatibility_certificate, is_compatible,
                                   member_adjacency, zero_cycle_free)
from src.config import DEFAULT_STABLE_CLOSURE_CAP
from src.cyclic.numbers import is_prime
from src.errors import ConsistencyError, InvalidInputError, PreconditionError
from src.models.cbc import BayonetSet, CbcFamily, Pair, encode_pairs
from src.models.transforms import DivisibilityReport
from src.models.verdicts import Verdict
from src.models.words import AmbiguityWitness, FiniteCode, bayonet_word, parse_bayonet
from src.utils.logger import ToolkitLogger
from src.words.codes import is_code

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

PairsLike = Union[BayonetSet, FiniteCode, Iterable[Pair]]


def phi(X: BayonetSet, d1: int, d2: int) -> BayonetSet:
    """{(d1 i mod n, d2 j mod n) : (i, j) in X}; may be smaller than X"""
    n = X.n
    return BayonetSet(n, encode_pairs(n, (((d1 * i) % n, (d2 * j) % n) for i, j in X.pairs)))


def phi_closure_check(family: CbcFamily, bd: BorderLike, X: BayonetSet, d1: int, d2: int,
                      closure_cap: int = DEFAULT_STABLE_CLOSURE_CAP) -> Verdict:
    """
    Add phi_{d1,d2}(X) to a family whose stable closure is bordered by (P, Q)
    and check the enlarged family is compatible with its closure still bordered
    by (P, Q)

    d1 multiplies left exponents and must be prime to |Q|; d2 multiplies right
    exponents and must be prime to |P|. The pairing crosses the one used to
    scale a border, (d1 P, d2 Q).

    Raises:
        PreconditionError: gcd conditions, X outside the family, or (P, Q)
            not bordering the stable closure
    """
    bd = as_border(bd)
    if X not in family:
        raise PreconditionError(f"{X} is not a member of the family")
    if gcd(d1, len(bd.Q)) != 1:
        raise PreconditionError(f"d1 = {d1} is not prime to |Q| = {len(bd.Q)}")
    if gcd(d2, len(bd.P)) != 1:
        raise PreconditionError(f"d2 = {d2} is not prime to |P| = {len(bd.P)}")
    stable = stable_closure(family, closure_cap)
    if not border_check_family(bd.P, bd.Q, stable):
        raise PreconditionError(f"{bd} does not border the stable closure")

    image = phi(X, d1, d2)
    details = {"image": image.to_dict(), "d1": d1, "d2": d2}
    if len(image) != family.n:
        return Verdict.no(details, reason=f"phi_{d1},{d2}(X) has {len(image)} pairs")
    if not zero_cycle_free(member_adjacency(image), family.n):
        details["incompatibility"] = incompatibility_certificate([image], family.n).to_dict()
        return Verdict.no(details, reason=f"phi_{d1},{d2}(X) is not an {family.n}-cbc")
    enlarged = family.with_member(image)
    verdict = is_compatible(enlarged)
    if not verdict.holds:
        details["incompatibility"] = verdict.certificate.to_dict()
        return Verdict.no(details, reason="the enlarged family is not compatible")
    enlarged_stable = stable_closure(enlarged, closure_cap)
    if not border_check_family(bd.P, bd.Q, enlarged_stable):
        return Verdict.no(details, reason=f"{bd} no longer borders the stable closure")
    details["closure_size"] = len(enlarged_stable)
    return Verdict.yes(details)


def _raw_pairs(T: PairsLike) -> Tuple[Pair, ...]:
    if isinstance(T, BayonetSet):
        return T.pairs
    if isinstance(T, FiniteCode):
        return tuple(sorted(parse_bayonet(word) for word in T.words))
    pairs = []
    for item in T:
        pairs.append(parse_bayonet(item) if isinstance(item, str) else (int(item[0]), int(item[1])))
    return tuple(sorted(set(pairs)))


def mu(T: PairsLike, d1: int, d2: int) -> FiniteCode:
    """{a^{d1 i} b a^{d2 j}}, exponents multiplied without reduction"""
    if d1 < 1 or d2 < 1:
        raise InvalidInputError(f"Multipliers must be positive, got ({d1}, {d2})")
    return FiniteCode.from_words(bayonet_word(d1 * i, d2 * j) for i, j in _raw_pairs(T))


def divisibility_analysis(T: PairsLike, prime_bound: int) -> DivisibilityReport:
    """
    Primes forced to divide the sides of any border of a cbc containing T

    If mu_{1,d}(T) is not a code then phi_{1,d} fails on every cbc X
    containing T, so d divides |P| for every border (P, Q) of {X}°;
    mu_{d,1}(T) likewise forces d to divide |Q|. Only primes are tested.

    Raises:
        PreconditionError: T is not a code
    """
    pairs = _raw_pairs(T)
    words = [bayonet_word(i, j) for i, j in pairs]
    verdict = is_code(words)
    if not verdict.holds:
        raise PreconditionError("The bayonet set is not a code", verdict.certificate.to_dict())

    report = DivisibilityReport(prime_bound=prime_bound)
    left, right = [], []
    for d in range(2, prime_bound + 1):
        if not is_prime(d):
            continue
        stretched_right = is_code(mu(pairs, 1, d))
        if not stretched_right.holds:
            right.append(d)
            report.right_witnesses[d] = stretched_right.certificate
        stretched_left = is_code(mu(pairs, d, 1))
        if not stretched_left.holds:
            left.append(d)
            report.left_witnesses[d] = stretched_left.certificate
    report.left_forced_primes = tuple(left)
    report.right_forced_primes = tuple(right)
    divisor = 1
    for d in left + right:
        divisor *= d
    report.n_divisor = divisor
    toolkit_logger.log_verdict("divisibility_analysis", str(divisor), f"left {left}, right {right}")
    return report


def mu_phi_bridge(witness: AmbiguityWitness, n: int) -> Optional[AmbiguityWitness]:
    """
    Reduce the exponents of an ambiguity of some mu(T) mod n

    The result is an ambiguity over {a^n} and the reduced words, hence over
    {a^n} + phi(X) for every n-cbc X containing T. None when the reduction
    makes both sides equal.

    Raises:
        ConsistencyError: the reduced sequences do not spell the same word
    """
    left = [parse_bayonet(word) for word in witness.left]
    right = [parse_bayonet(word) for word in witness.right]
    if len(left) != len(right):
        raise InvalidInputError("Both sides of a bayonet ambiguity have as many words as b's")
    steps = [((i1 % n, j1 % n), (i2 % n, j2 % n)) for (i1, j1), (i2, j2) in zip(left, right)]
    reduced = align_with_powers(steps, n)
    if reduced.left == reduced.right:
        return None
    code = {"a" * n} | {bayonet_word(i, j) for step in steps for i, j in step}
    if not reduced.verify(code):
        raise ConsistencyError(f"Reduced witness {reduced} does not spell one word")
    return reduced
