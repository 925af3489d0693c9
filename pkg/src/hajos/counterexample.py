import logging
from math import gcd
from typing import Dict, List, Tuple

from src.cbc.core import is_cbc
from src.config import DEFAULT_KRASNER_MAX_N
from src.cyclic.factorizations import is_factorization, periods
from src.cyclic.numbers import is_prime
from src.errors import ConsistencyError, PreconditionError
from src.hajos.recognition import is_hajos_cbc, krasner_border_of
from src.models.cbc import Cbc, encode_pairs
from src.models.cyclic import ResidueSet
from src.models.hajos import ASSIGNMENT_VALUES, CounterexampleBundle, NonHajosSpec
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)


def _sumset(*blocks: Tuple[int, int]) -> List[int]:
    """Sum of the sets stride * [size] for each (stride, size)"""
    values = {0}
    for stride, size in blocks:
        values = {value + stride * k for value in values for k in range(size)}
    return sorted(values)


def non_hajos_sets(spec: NonHajosSpec) -> Tuple[List[int], List[int], List[int]]:
    """
    L = p1p2[q1] + q1q2[p1], R1 = p1p2q1[q2] + p1[p2], R2 = p1q1q2[p2] + q1[q2]
    """
    p1, p2, q1, q2 = spec.p1, spec.p2, spec.q1, spec.q2
    L = _sumset((p1 * p2, q1), (q1 * q2, p1))
    R1 = _sumset((p1 * p2 * q1, q2), (p1, p2))
    R2 = _sumset((p1 * q1 * q2, p2), (q1, q2))
    return L, R1, R2


def _validate(spec: NonHajosSpec) -> None:
    for name in ("p1", "p2", "q1", "q2"):
        value = getattr(spec, name)
        if not is_prime(value):
            raise PreconditionError(f"{name} = {value} is not prime")
    if gcd(spec.p1 * spec.p2, spec.q1) != 1:
        raise PreconditionError("p1 p2 must be prime to q1")
    if gcd(spec.q1 * spec.q2, spec.p1) != 1:
        raise PreconditionError("q1 q2 must be prime to p1")


def _assignment(spec: NonHajosSpec, L: List[int]) -> Dict[int, str]:
    if spec.assignment is None:
        return {element: "R1" if element == 0 else "R2" for element in L}
    given = spec.assignment_map()
    unknown = sorted(set(given) - set(L))
    if unknown:
        raise PreconditionError(f"Assignment keys {unknown} are not in L = {L}")
    bad = sorted({value for value in given.values() if value not in ASSIGNMENT_VALUES})
    if bad:
        raise PreconditionError(f"Assignment values must be R1 or R2, got {bad}")
    assignment = {element: given.get(element, "R2") for element in L}
    if set(assignment.values()) != set(ASSIGNMENT_VALUES):
        raise PreconditionError("The assignment must use both R1 and R2")
    return assignment


def build_non_hajos_cbc(spec: NonHajosSpec, krasner_max_n: int = DEFAULT_KRASNER_MAX_N) -> CounterexampleBundle:
    """
    The cbc sum over l in L of a^l b a^{D_l}, D_l in {R1, R2}, and its checks

    Every property the construction relies on is checked separately so a
    failing bundle names the property that broke. The Krasner check is
    skipped, and recorded as skipped, past krasner_max_n.
    """
    _validate(spec)
    n = spec.n
    L, R1, R2 = non_hajos_sets(spec)
    assignment = _assignment(spec, L)
    rights = {"R1": R1, "R2": R2}
    pairs = [(element, d) for element in L for d in rights[assignment[element]]]
    Y = Cbc(n, encode_pairs(n, pairs))
    if len(Y) != len(pairs):
        raise ConsistencyError("The construction produced repeated pairs")

    L_set, R1_set, R2_set = (ResidueSet.of(n, values) for values in (L, R1, R2))
    R1_periods = [m for m in periods(R1_set).elements if m]
    R2_periods = [m for m in periods(R2_set).elements if m]
    checks = {
        "L_R1_factorization": is_factorization(L_set, R1_set, n),
        "L_R2_factorization": is_factorization(L_set, R2_set, n),
        "R1_periodic": bool(R1_periods),
        "R2_periodic": bool(R2_periods),
        "no_common_period": not set(R1_periods) & set(R2_periods),
        "L_aperiodic": periods(L_set).elements == (0,),
        "is_cbc": is_cbc(n, Y).holds,
    }
    checks["not_hajos"] = checks["is_cbc"] and not is_hajos_cbc(Y).holds
    details = {
        "n": n,
        "R1_periods": R1_periods,
        "R2_periods": R2_periods,
        "assignment": {str(element): value for element, value in sorted(assignment.items())},
    }
    if n <= krasner_max_n:
        border = krasner_border_of(Y, krasner_max_n)
        checks["no_krasner_border"] = border is None
        if border is not None:
            details["krasner_border"] = border.to_dict()
    else:
        details["no_krasner_border"] = f"skipped for n > {krasner_max_n}"

    bundle = CounterexampleBundle(spec, tuple(L), tuple(R1), tuple(R2), Y, checks, details)
    if bundle.all_passed:
        toolkit_logger.log_verdict("build_non_hajos_cbc", "yes", f"n={n}")
    else:
        logger.warning(f"Counterexample checks failed: {bundle.failed_checks()}")
    return bundle
