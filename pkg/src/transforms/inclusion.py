import logging
from typing import Any, Dict, Iterable, List

from src.cbc.enumeration import joint_embeddability
from src.config import DEFAULT_MAX_ENUMERATION_N, DEFAULT_PREFIX_SUFFIX_DEPTH, DEFAULT_PREFIX_SUFFIX_SPLIT_CAP
from src.cyclic.numbers import is_cbc_hajos_number
from src.errors import (ConsistencyError, EnvelopeExceededError, InvalidInputError, PreconditionError,
                        UnsupportedInstanceError)
from src.hajos.recognition import is_hajos_cbc
from src.models.cbc import BayonetSet, CbcFamily, Pair, encode_pairs
from src.models.transforms import InclusionReport
from src.models.verdicts import VerdictStatus
from src.models.words import FiniteCode
from src.transforms.completion import complete_hajos
from src.transforms.prefix_suffix import is_prefix_suffix, restrict_chain, validate_chain
from src.utils.logger import ToolkitLogger
from src.words.codes import is_code

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

MAXIMAL = "finite_maximal"
IN_CBC = "in_cbc"
IN_HAJOS_CBC = "in_hajos_cbc"
PREFIX_SUFFIX = "prefix_suffix"


def _strip_a(word: str):
    lead = len(word) - len(word.lstrip("a"))
    trail = len(word) - len(word.rstrip("a"))
    return lead, word[lead:len(word) - trail], trail


def split_around(word: str, omega: str) -> Pair:
    """(i, j) with word = a^i omega a^j"""
    omega_lead, omega_core, omega_trail = _strip_a(omega)
    lead, core, trail = _strip_a(word)
    i, j = lead - omega_lead, trail - omega_trail
    if core != omega_core or i < 0 or j < 0:
        raise InvalidInputError(f"{word!r} is not of the form a^i {omega} a^j")
    return i, j


def inclusion_equivalence(X: Iterable[str], omega: str, n: int,
                          max_n: int = DEFAULT_MAX_ENUMERATION_N,
                          depth_bound: int = DEFAULT_PREFIX_SUFFIX_DEPTH,
                          split_cap: int = DEFAULT_PREFIX_SUFFIX_SPLIT_CAP) -> InclusionReport:
    """
    Evaluate the equivalent statements about M = {a^n} + X, X in a* omega a*

    in_cbc: the residue pairs of X lie in some n-cbc (exhaustive search up
    to max_n). in_hajos_cbc: that cbc is of Hajós, which must hold when n
    is a cbc Hajós number. prefix_suffix: M has a chain of prefix and
    suffix steps, built by completion when a Hajós cbc was found and
    searched for otherwise. finite_maximal is reported as implied by the
    others.

    Raises:
        UnsupportedInstanceError: n is not a cbc Hajós number
        PreconditionError: omega in a*, or M is not a code
        ConsistencyError: two statements decided in opposite ways
    """
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if not is_cbc_hajos_number(n):
        raise UnsupportedInstanceError(f"{n} is not a cbc Hajós number; the statements need not agree")
    if not omega or set(omega) == {"a"}:
        raise PreconditionError(f"omega must contain a letter other than a, got {omega!r}")
    words = sorted(set(X))
    if not words:
        raise InvalidInputError("X must not be empty")
    raw: List[Pair] = sorted(split_around(word, omega) for word in words)
    M = FiniteCode.from_words(["a" * n] + words)
    verdict = is_code(M)
    if not verdict.holds:
        raise PreconditionError("{a^n} + X is not a code", verdict.certificate.to_dict())

    residues = BayonetSet(n, encode_pairs(n, ((i % n, j % n) for i, j in raw)))
    report = InclusionReport(n=n, omega=omega)
    evidence: Dict[str, Any] = {"residues": residues.to_dict()}

    try:
        embedding = joint_embeddability([residues.pairs], n, max_n)
    except EnvelopeExceededError as e:
        report.statuses[IN_CBC] = VerdictStatus.UNKNOWN
        evidence[IN_CBC] = e.to_dict()
        embedding = None
    else:
        report.statuses[IN_CBC] = embedding.status
        evidence[IN_CBC] = ([member.to_dict() for member in embedding.certificate]
                            if embedding.holds else embedding.certificate)

    Y = embedding.certificate[0] if embedding is not None and embedding.holds else None
    if Y is not None:
        hajos = is_hajos_cbc(Y)
        if not hajos.holds:
            raise ConsistencyError(f"{Y} is not of Hajós although {n} is a cbc Hajós number",
                                   hajos.certificate)
        report.statuses[IN_HAJOS_CBC] = VerdictStatus.YES
        evidence[IN_HAJOS_CBC] = hajos.certificate.to_dict()
    elif report.statuses[IN_CBC] is VerdictStatus.NO:
        report.statuses[IN_HAJOS_CBC] = VerdictStatus.NO
        evidence[IN_HAJOS_CBC] = "implied: a Hajós cbc is a cbc"
    else:
        report.statuses[IN_HAJOS_CBC] = VerdictStatus.UNKNOWN

    if Y is not None:
        completed = raw + [pair for pair in Y.pairs if pair not in residues]
        result = complete_hajos(CbcFamily.of([Y]), ["a", omega], {omega: completed},
                                depth_bound=depth_bound, split_cap=split_cap)
        chain = restrict_chain(result.chain, M)
        if not validate_chain(chain):
            raise ConsistencyError("The restricted completion chain does not re-validate")
        report.statuses[PREFIX_SUFFIX] = VerdictStatus.YES
        evidence[PREFIX_SUFFIX] = {"completion": result.to_dict(), "chain": chain.to_dict()}
    else:
        searched = is_prefix_suffix(M, depth_bound, split_cap)
        report.statuses[PREFIX_SUFFIX] = searched.status
        evidence[PREFIX_SUFFIX] = searched.to_dict()

    decided = {status for status in report.statuses.values() if status is not VerdictStatus.UNKNOWN}
    if len(decided) > 1:
        raise ConsistencyError("The statements disagree",
                               {name: status.value for name, status in report.statuses.items()})
    report.statuses[MAXIMAL] = decided.pop() if decided else VerdictStatus.UNKNOWN
    evidence[MAXIMAL] = "implied by the other statements"
    report.evidence = evidence
    toolkit_logger.log_verdict("inclusion_equivalence", report.overall.value, f"n={n}, omega={omega}")
    return report
