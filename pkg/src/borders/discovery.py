import logging
from typing import List, Optional, Sequence, Tuple

from src.borders.checks import border_check_family
from src.cbc.compatibility import is_compatible
from src.cbc.core import compose, left_set, right_classes, right_of
from src.cyclic.factorizations import is_factorization
from src.errors import ConsistencyError, EnvelopeExceededError, InvalidInputError, PreconditionError
from src.models.borders import NormalizedBorderReport, TraceEntry
from src.models.cbc import BayonetSet, Cbc, CbcFamily
from src.models.cyclic import FactorizationPair, ResidueSet
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

# Each shrinking round doubles the trace
MAX_TRACE_LENGTH = 1 << 16

Trace = List[TraceEntry]


def replay_trace(family: CbcFamily, seed: int, trace: Sequence[TraceEntry]) -> BayonetSet:
    """seed o_r1 X_1 o_r2 ... o_rk X_k, composed left to right"""
    if not 0 <= seed < len(family):
        raise InvalidInputError(f"Seed member {seed} is not in the family")
    current: BayonetSet = family.members[seed]
    for entry in trace:
        if not 0 <= entry.member < len(family):
            raise InvalidInputError(f"Trace member {entry.member} is not in the family")
        current = compose(current, family.members[entry.member], entry.r)
    return current


def _sums(R: ResidueSet, L: ResidueSet, n: int) -> int:
    mask = 0
    for r in R.elements:
        for l in L.elements:
            mask |= 1 << ((r + l) % n)
    return mask


def _uncovered_cell(R: ResidueSet, X: BayonetSet, L: ResidueSet) -> Optional[Tuple[int, int]]:
    """Smallest (i, j) not in a^R X a^L mod n"""
    n = X.n
    covered = set()
    for i, j in X.pairs:
        for r in R.elements:
            for l in L.elements:
                covered.add(((i + r) % n, (j + l) % n))
    for i in range(n):
        for j in range(n):
            if (i, j) not in covered:
                return i, j
    return None


def _shrink_left(family: CbcFamily, Y: BayonetSet, seed: int,
                 trace: Trace) -> Optional[Tuple[BayonetSet, Trace]]:
    """
    One round removing an element k of L(Y), or None when Y borders the family

    For the smallest k where (R^k(Y), L(Y)) fails, either some i misses
    R^k(Y) + L(Y) and Y o_i Y is taken, or a cell (i, j) misses
    a^{R^k(Y)} X a^{L(Y)} for some member X and Y o_i X o_j Y is taken.
    """
    n = family.n
    L = left_set(Y)
    for k in L.elements:
        R = right_of(Y, k)
        free = _sums(R, L, n) ^ ((1 << n) - 1)
        if free:
            i = (free & -free).bit_length() - 1
            return compose(Y, Y, i), trace + [TraceEntry(seed, i)] + trace
        for index, X in enumerate(family.members):
            cell = _uncovered_cell(R, X, L)
            if cell is not None:
                i, j = cell
                shrunk = compose(compose(Y, X, i), Y, j)
                return shrunk, trace + [TraceEntry(index, i), TraceEntry(seed, j)] + trace
    return None


def _merge_right(Y: BayonetSet, seed: int, trace: Trace) -> Optional[Tuple[BayonetSet, Trace]]:
    """One round merging two distinct overlapping right classes, or None"""
    n = Y.n
    classes = right_classes(Y)
    overlaps = []
    for index, first in enumerate(classes):
        for second in classes[index + 1:]:
            common = first.mask & second.mask
            if common:
                overlaps.append((common & -common).bit_length() - 1)
    if not overlaps:
        return None
    r = (min(overlaps) + min(left_set(Y).elements)) % n
    return compose(Y, Y, r), trace + [TraceEntry(seed, r)] + trace


def find_border(family: CbcFamily, seed: int = 0) -> NormalizedBorderReport:
    """
    Compose members, starting from the seed, into a cbc Y that borders the family
    and whose right classes are pairwise equal or disjoint

    Every (R, L(Y)) for R in R(Y) is then a factorization bordering the family.

    Raises:
        PreconditionError: the family is not compatible
        ConsistencyError: a round fails to make progress or a result fails its check
    """
    if not 0 <= seed < len(family):
        raise InvalidInputError(f"Seed member {seed} is not in the family")
    verdict = is_compatible(family)
    if not verdict.holds:
        raise PreconditionError("find_border needs a compatible family", verdict.certificate.to_dict())

    Y: BayonetSet = family.members[seed]
    trace: Trace = []
    n = family.n

    for _ in range(n + 1):
        step = _shrink_left(family, Y, seed, trace)
        if step is None:
            break
        shrunk, trace = step
        if len(left_set(shrunk)) >= len(left_set(Y)):
            raise ConsistencyError("Left set did not shrink")
        Y = shrunk
        _check_trace(trace)
    else:
        raise ConsistencyError("find_border did not reach a bordering cbc")

    for _ in range(n + 1):
        step = _merge_right(Y, seed, trace)
        if step is None:
            break
        merged, trace = step
        if len(right_classes(merged)) >= len(right_classes(Y)):
            raise ConsistencyError("Right classes did not merge")
        Y = merged
        _check_trace(trace)
    else:
        raise ConsistencyError("find_border did not separate the right classes")

    L = left_set(Y)
    factorizations = tuple(FactorizationPair(n, R, L) for R in right_classes(Y))
    for pair in factorizations:
        if not is_factorization(pair.P, pair.Q, n) or not border_check_family(pair.P, pair.Q, family):
            raise ConsistencyError(f"{pair} should be a factorization bordering the family")
    toolkit_logger.log_verdict("find_border", "yes", f"{len(trace)} compositions, {len(factorizations)} factorizations")
    return NormalizedBorderReport(seed, Cbc(Y.n, Y.mask), tuple(trace), factorizations)


def _check_trace(trace: Trace) -> None:
    if len(trace) > MAX_TRACE_LENGTH:
        toolkit_logger.log_envelope("find_border", MAX_TRACE_LENGTH, len(trace))
        raise EnvelopeExceededError(f"Composition trace longer than {MAX_TRACE_LENGTH}",
                                    MAX_TRACE_LENGTH, len(trace))


def check_border_report(family: CbcFamily, report: NormalizedBorderReport) -> bool:
    """Replay the trace and re-check every factorization of the report"""
    Y = replay_trace(family, report.seed, report.trace)
    if Y != report.bordering_cbc:
        return False
    classes = right_classes(Y)
    for index, first in enumerate(classes):
        for second in classes[index + 1:]:
            if first.mask & second.mask:
                return False
    L = left_set(Y)
    expected = {(R.mask, L.mask) for R in classes}
    if {(pair.P.mask, pair.Q.mask) for pair in report.factorizations} != expected:
        return False
    return all(is_factorization(pair.P, pair.Q, family.n) and border_check_family(pair.P, pair.Q, family)
               for pair in report.factorizations)
