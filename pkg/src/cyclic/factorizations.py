import logging
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from src.config import DEFAULT_EXTEND_MAX_N
from src.cyclic.numbers import divisors
from src.errors import EnvelopeExceededError, InvalidInputError, PreconditionError
from src.models.cyclic import (FactorizationPair, FactorSide,
                               HajosFactorizationChain, HajosFactorizationStep,
                               ResidueSet, full_mask, mask_elements, rotate_mask)
from src.models.verdicts import Verdict
from src.models.words import FiniteCode, as_word_list
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

SetLike = Union[ResidueSet, Iterable[int]]


def as_residue_set(S: SetLike, n: int) -> ResidueSet:
    if isinstance(S, ResidueSet):
        if S.n != n:
            raise InvalidInputError(f"Set lives in Z_{S.n}, expected Z_{n}")
        return S
    return ResidueSet.of(n, S)


def sumset_mask(P: int, Q: int, n: int) -> Optional[int]:
    """Mask of P + Q in Z_n, or None when two sums collide"""
    covered = 0
    for p in mask_elements(P):
        row = rotate_mask(Q, p, n)
        if covered & row:
            return None
        covered |= row
    return covered


def is_factorization(P: SetLike, Q: SetLike, n: int) -> bool:
    """Every element of Z_n is p + q for exactly one (p, q) in P x Q"""
    P, Q = as_residue_set(P, n), as_residue_set(Q, n)
    return sumset_mask(P.mask, Q.mask, n) == full_mask(n)


def periods(S: ResidueSet) -> ResidueSet:
    """Periods of S together with 0"""
    if not S.mask:
        raise InvalidInputError("The period set of the empty set is not defined")
    return ResidueSet.of(S.n, (m for m in range(S.n) if S.is_periodic(m)))


def decompose_periodic(S: ResidueSet, m: int) -> ResidueSet:
    """S mod m in Z_m, for a period m dividing n; S = S mod m + m[n/m] in Z_n"""
    n = S.n
    if not 0 < m < n or n % m:
        raise PreconditionError(f"Period {m} must be a proper divisor of {n}")
    if not S.is_periodic(m):
        raise PreconditionError(f"{S} is not {m}-periodic in Z_{n}")
    return ResidueSet.reduced(m, S.elements)


def normalize(f: FactorizationPair, p: int, q: int) -> FactorizationPair:
    """(P - p, Q - q), which contains 0 on both sides"""
    if not is_factorization(f.P, f.Q, f.n):
        raise PreconditionError(f"{f} is not a factorization of Z_{f.n}")
    if p not in f.P or q not in f.Q:
        raise PreconditionError(f"({p}, {q}) is not in P x Q")
    return FactorizationPair(f.n, f.P.shift(-p), f.Q.shift(-q))


def tilings(Q: int, n: int, P: int = 0, covered: Optional[int] = None) -> Iterator[int]:
    """
    Every P' containing P such that P' + Q tiles Z_n exactly

    Branches on the smallest uncovered residue u: some p with u - p in Q
    has to be added.
    """
    if covered is None:
        covered = sumset_mask(P, Q, n)
        if covered is None:
            return
    full = full_mask(n)
    if covered == full:
        yield P
        return
    u = ((covered ^ full) & -(covered ^ full)).bit_length() - 1
    for q in mask_elements(Q):
        p = (u - q) % n
        if P >> p & 1:
            continue
        row = rotate_mask(Q, p, n)
        if covered & row:
            continue
        yield from tilings(Q, n, P | 1 << p, covered | row)


def enumerate_factorizations(n: int) -> List[FactorizationPair]:
    """All factorizations of Z_n with 0 in P and 0 in Q"""
    result = []
    for size_q in divisors(n):
        for rest in combinations(range(1, n), size_q - 1):
            Q = 1
            for q in rest:
                Q |= 1 << q
            for P in tilings(Q, n, P=1):
                result.append(FactorizationPair(n, ResidueSet(n, P), ResidueSet(n, Q)))
    result.sort(key=lambda pair: (len(pair.P), pair.P.elements, pair.Q.elements))
    return result


class _ExtensionSearch:
    """Backtracking over (P, Q) with P0, Q0 kept, sizes bounded by a divisor split"""

    def __init__(self, n: int, size_p: int, size_q: int):
        self.n = n
        self.size_p = size_p
        self.size_q = size_q
        self.full = full_mask(n)
        self.nodes = 0

    def solve(self, P: int, Q: int, covered: int) -> Optional[Tuple[int, int]]:
        self.nodes += 1
        if covered == self.full:
            return P, Q
        n = self.n
        free = covered ^ self.full
        u = (free & -free).bit_length() - 1
        count_p = bin(P).count("1")
        count_q = bin(Q).count("1")

        # u = old p + new q
        if count_q < self.size_q:
            for p in mask_elements(P):
                q = (u - p) % n
                if Q >> q & 1:
                    continue
                column = rotate_mask(P, q, n)
                if covered & column:
                    continue
                found = self.solve(P, Q | 1 << q, covered | column)
                if found:
                    return found
        # u = new p + old q
        if count_p < self.size_p:
            for q in mask_elements(Q):
                p = (u - q) % n
                if P >> p & 1:
                    continue
                row = rotate_mask(Q, p, n)
                if covered & row:
                    continue
                found = self.solve(P | 1 << p, Q, covered | row)
                if found:
                    return found
        # u = new p + new q
        if count_p < self.size_p and count_q < self.size_q:
            for p in range(n):
                q = (u - p) % n
                if P >> p & 1 or Q >> q & 1:
                    continue
                row = rotate_mask(Q, p, n)
                column = rotate_mask(P, q, n)
                cell = 1 << u
                if covered & (row | column | cell) or row & column or (row | column) & cell:
                    continue
                found = self.solve(P | 1 << p, Q | 1 << q, covered | row | column | cell)
                if found:
                    return found
        return None


def extend_to_factorization(P0: SetLike, Q0: SetLike, n: int,
                            max_n: int = DEFAULT_EXTEND_MAX_N) -> Verdict:
    """
    Search a factorization (P, Q) of Z_n with P0 in P and Q0 in Q

    Returns:
        Verdict.yes(FactorizationPair) or Verdict.no() once every divisor
        split (|P|, |Q|) compatible with the given parts is exhausted
    """
    if n > max_n:
        raise EnvelopeExceededError(f"extend_to_factorization supports n <= {max_n}", max_n, n)
    P0, Q0 = as_residue_set(P0, n), as_residue_set(Q0, n)
    P, Q = P0.mask, Q0.mask
    # translating an empty side leaves the other constraint untouched
    if not P:
        P = 1
    if not Q:
        Q = 1
    covered = sumset_mask(P, Q, n)
    if covered is None:
        return Verdict.no(reason=f"{P0} + {Q0} already has a repeated sum")

    nodes = 0
    for size_p in divisors(n):
        size_q = n // size_p
        if size_p < bin(P).count("1") or size_q < bin(Q).count("1"):
            continue
        search = _ExtensionSearch(n, size_p, size_q)
        found = search.solve(P, Q, covered)
        nodes += search.nodes
        if found:
            pair = FactorizationPair(n, ResidueSet(n, found[0]), ResidueSet(n, found[1]))
            toolkit_logger.log_verdict("extend_to_factorization", "yes", str(pair))
            return Verdict.yes(pair)
    toolkit_logger.log_search("extend_to_factorization", nodes, "exhausted")
    return Verdict.no(reason=f"No factorization of Z_{n} extends ({P0}, {Q0})")


def _canonical_mask(mask: int, n: int) -> int:
    return min(rotate_mask(mask, k, n) for k in range(n))


def _hajos_chain(P: int, Q: int, n: int,
                 memo: Dict[Tuple[int, int, int], Optional[Tuple[HajosFactorizationStep, ...]]]
                 ) -> Optional[Tuple[HajosFactorizationStep, ...]]:
    if n == 1:
        return ()
    key = (n, _canonical_mask(P, n), _canonical_mask(Q, n))
    if key in memo:
        return memo[key]
    memo[key] = None
    for m in divisors(n)[:-1]:
        for side, mask in ((FactorSide.P, P), (FactorSide.Q, Q)):
            if rotate_mask(mask, m, n) != mask:
                continue
            reduced_p = ResidueSet.reduced(m, mask_elements(P)).mask
            reduced_q = ResidueSet.reduced(m, mask_elements(Q)).mask
            rest = _hajos_chain(reduced_p, reduced_q, m, memo)
            if rest is not None:
                memo[key] = (HajosFactorizationStep(m, side),) + rest
                return memo[key]
    return None


def is_hajos_factorization(f: FactorizationPair) -> Verdict:
    """
    Decide whether a factorization reduces to size 1 through periodic sides

    A side that is m-periodic is reduced mod m together with the other side;
    every period dividing n is tried on both sides, so No is exhaustive.
    """
    if not is_factorization(f.P, f.Q, f.n):
        raise PreconditionError(f"{f} is not a factorization of Z_{f.n}")
    chain = _hajos_chain(f.P.mask, f.Q.mask, f.n, {})
    if chain is None:
        toolkit_logger.log_verdict("is_hajos_factorization", "no", str(f))
        return Verdict.no(reason=f"No periodic reduction of {f} reaches size 1")
    return Verdict.yes(HajosFactorizationChain(chain))


def check_hajos_factorization_chain(f: FactorizationPair, chain: HajosFactorizationChain) -> bool:
    """Replay a chain: each step needs the named side to be periodic and the reduction to stay a factorization"""
    n, P, Q = f.n, f.P, f.Q
    if not is_factorization(P, Q, n):
        return False
    for step in chain.steps:
        m = step.period
        if not 0 < m < n or n % m:
            return False
        side = P if step.side is FactorSide.P else Q
        if not side.is_periodic(m):
            return False
        P, Q, n = ResidueSet.reduced(m, P.elements), ResidueSet.reduced(m, Q.elements), m
        if not is_factorization(P, Q, n):
            return False
    return n == 1


def extract_restivo_pair(M: Union[FiniteCode, Iterable[str]], n: int,
                         letter: str = "b") -> Tuple[ResidueSet, ResidueSet]:
    """({k : a^k b+ in M}, {k : b+ a^k in M}) read mod n"""
    words = set(as_word_list(M))
    if letter not in words:
        raise PreconditionError(f"{letter!r} must belong to the code")
    if "a" * n not in words:
        raise PreconditionError(f"a^{n} must belong to the code")
    left, right = [], []
    for word in words:
        body = word.lstrip("a")
        if body and set(body) == {letter}:
            left.append(len(word) - len(body))
        body = word.rstrip("a")
        if body and set(body) == {letter}:
            right.append(len(word) - len(body))
    return ResidueSet.reduced(n, left), ResidueSet.reduced(n, right)
