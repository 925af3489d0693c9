import logging
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.borders.checks import border_check, border_check_family, right_of_shifted
from src.cbc.closure import stable_closure
from src.cbc.compatibility import is_compatible
from src.cbc.core import dual
from src.config import DEFAULT_KRASNER_MAX_N, DEFAULT_STABLE_CLOSURE_CAP
from src.cyclic.krasner import enumerate_krasner, is_krasner
from src.cyclic.numbers import divisors, is_prime
from src.errors import ConsistencyError, EnvelopeExceededError, InvalidInputError, PreconditionError
from src.hajos.expansion import chain_border, is_right_periodic
from src.models.cbc import BayonetSet, Cbc, CbcFamily
from src.models.cyclic import FactorizationPair, ResidueSet
from src.models.hajos import FamilyHajosChain, FamilyHajosStep, HajosChain, HajosStep, Side
from src.models.verdicts import Verdict
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

Steps = Tuple[HajosStep, ...]


def _oriented(Y: BayonetSet, side: Side) -> BayonetSet:
    return dual(Y) if side is Side.DUAL else Y


def _flip_first(steps: Steps) -> Steps:
    if not steps:
        return steps
    return (steps[0].flipped(),) + steps[1:]


class _CbcDecomposer:
    """Memoized search for a Hajós chain of a single cbc, keyed on the smaller of Y and dual(Y)"""

    def __init__(self):
        self.memo: Dict[Tuple[int, int], Optional[Steps]] = {}
        self.explored = 0

    def chain(self, Y: BayonetSet) -> Optional[Steps]:
        if Y.n == 1:
            return ()
        mirrored = dual(Y)
        canonical = min(Y, mirrored, key=lambda member: member.sort_key)
        key = (canonical.n, canonical.mask)
        if key not in self.memo:
            self.memo[key] = self._search(canonical)
        steps = self.memo[key]
        if steps is None or canonical == Y:
            return steps
        return _flip_first(steps)

    def _search(self, Y: BayonetSet) -> Optional[Steps]:
        n = Y.n
        for t in divisors(n)[1:]:
            m = n // t
            for side in (Side.DIRECT, Side.DUAL):
                self.explored += 1
                verdict = is_right_periodic(_oriented(Y, side), m)
                if not verdict.holds:
                    continue
                params = verdict.certificate
                rest = self.chain(params.base)
                if rest is not None:
                    return (HajosStep(t, side, params.shifts, params.base),) + rest
        return None


def is_hajos_cbc(Y: BayonetSet) -> Verdict:
    """
    Decide whether Y is built from {b} by H_t expansions and duals

    Divisors t of n are tried in increasing order, the direct side before
    the dual one; Y in H_t(X) forces X = Y mod n/t, so No is exhaustive.
    """
    if not is_compatible([Y]).holds or len(Y) != Y.n:
        raise PreconditionError(f"{Y} is not an {Y.n}-cbc")
    decomposer = _CbcDecomposer()
    steps = decomposer.chain(Y)
    toolkit_logger.log_search("is_hajos_cbc", decomposer.explored, f"n={Y.n}")
    if steps is None:
        toolkit_logger.log_verdict("is_hajos_cbc", "no", f"n={Y.n}")
        return Verdict.no({"kind": "hajos_exhaustion", "n": Y.n, "explored": decomposer.explored},
                          reason="no divisor and side leads back to {b}")
    return Verdict.yes(HajosChain(steps))


def _members(family: Union[CbcFamily, Iterable[BayonetSet]]) -> CbcFamily:
    if isinstance(family, CbcFamily):
        return family
    return CbcFamily.of(family)


def _family_step(members: Sequence[BayonetSet], t: int, side: Side) -> Optional[List[Cbc]]:
    """Bases of every member after one step, or None if some member is not periodic"""
    m = members[0].n // t
    bases = []
    for member in members:
        verdict = is_right_periodic(_oriented(member, side), m)
        if not verdict.holds:
            return None
        bases.append(verdict.certificate.base)
    return bases


def _memberwise_chain(members: Tuple[BayonetSet, ...],
                      memo: Dict[Tuple[int, Tuple[int, ...]], Optional[Tuple[FamilyHajosStep, ...]]]
                      ) -> Optional[Tuple[FamilyHajosStep, ...]]:
    n = members[0].n
    if n == 1:
        return ()
    key = (n, tuple(sorted({member.mask for member in members})))
    if key in memo:
        return memo[key]
    memo[key] = None
    for t in divisors(n)[1:]:
        for side in (Side.DIRECT, Side.DUAL):
            bases = _family_step(members, t, side)
            if bases is None:
                continue
            rest = _memberwise_chain(tuple(sorted(set(bases), key=lambda base: base.sort_key)), memo)
            if rest is not None:
                memo[key] = (FamilyHajosStep(t, side),) + rest
                return memo[key]
    return None


def is_hajos_family(family: Union[CbcFamily, Iterable[BayonetSet]], shared: bool = True) -> Verdict:
    """
    Decide whether a compatible family is of Hajós

    With shared=True every member must reduce to one common cbc below the
    first step, the literal reading of the definition; the certificate of a
    failure lists, for each step where all members were periodic, the groups
    of members sharing a reduction. With shared=False each level reduces the
    family member-wise.
    """
    family = _members(family)
    verdict = is_compatible(family)
    if not verdict.holds:
        raise PreconditionError("is_hajos_family needs a compatible family", verdict.certificate.to_dict())
    members = family.members
    n = family.n
    if n == 1:
        return Verdict.yes(FamilyHajosChain((), shared))

    if not shared:
        steps = _memberwise_chain(members, {})
        if steps is None:
            toolkit_logger.log_verdict("is_hajos_family", "no", f"member-wise, n={n}")
            return Verdict.no({"kind": "family_exhaustion", "n": n, "shared": False},
                              reason="no sequence of periodic reductions reaches {b}")
        return Verdict.yes(FamilyHajosChain(steps, shared=False))

    breaks = []
    decomposer = _CbcDecomposer()
    for t in divisors(n)[1:]:
        for side in (Side.DIRECT, Side.DUAL):
            bases = _family_step(members, t, side)
            if bases is None:
                continue
            groups: Dict[Cbc, List[int]] = {}
            for index, base in enumerate(bases):
                groups.setdefault(base, []).append(index)
            if len(groups) > 1:
                breaks.append({"t": t, "side": side.value,
                               "groups": sorted(groups.values())})
                continue
            rest = decomposer.chain(bases[0])
            if rest is not None:
                steps = (FamilyHajosStep(t, side),) + tuple(FamilyHajosStep(step.t, step.side) for step in rest)
                return Verdict.yes(FamilyHajosChain(steps, shared=True))
    toolkit_logger.log_verdict("is_hajos_family", "no", f"shared, n={n}, {len(breaks)} sharing breaks")
    return Verdict.no({"kind": "family_exhaustion", "n": n, "shared": True, "sharing_breaks": breaks},
                      reason="no first step leads to a common Hajós reduction")


def periodicity_criterion(family: Union[CbcFamily, Iterable[BayonetSet]], P: Iterable[int], m: int,
                          Q: Optional[Iterable[int]] = None, check_border: bool = True,
                          closure_cap: int = DEFAULT_STABLE_CLOSURE_CAP) -> bool:
    """
    Whether every R^k(a^{P + m[t]} Y) is m-periodic, over all members Y and k

    (P + m[t], Q) must border the stable closure; with check_border the
    closure is computed and checked, and a True answer is confirmed by
    is_right_periodic on every member.

    Raises:
        PreconditionError: m is not a proper divisor of n, or the lifted pair
            does not border the stable closure
    """
    family = _members(family)
    n = family.n
    if not 0 < m < n or n % m:
        raise PreconditionError(f"m must be a proper divisor of {n}, got {m}")
    t = n // m
    lifted = sorted({p + m * k for p in P for k in range(t)})
    if check_border:
        if Q is None:
            raise PreconditionError("Checking the border needs its right part Q")
        stable = stable_closure(family, closure_cap)
        if not border_check_family(lifted, list(Q), stable):
            raise PreconditionError(f"({lifted}, {sorted(Q)}) does not border the stable closure")

    periodic = all(
        right_of_shifted(member, lifted, k).is_periodic(m)
        for member in family.members
        for k in range(n)
    )
    if periodic and check_border:
        for member in family.members:
            if not is_right_periodic(member, m).holds:
                raise ConsistencyError(f"{member} has m-periodic right sets but is not {m}-right-periodic")
    return periodic


def krasner_border_equivalence(family: Union[CbcFamily, Iterable[BayonetSet]],
                               closure_cap: int = DEFAULT_STABLE_CLOSURE_CAP,
                               krasner_max_n: int = DEFAULT_KRASNER_MAX_N) -> Verdict:
    """
    Hajós-ness of a family decided twice: by periodic reductions and by a
    Krasner factorization bordering the stable closure

    The two answers must agree. Krasner candidates are first checked against
    the members themselves; the closure is only built when one survives.
    Past krasner_max_n, or when the closure outgrows its cap, only the
    reduction answer is returned, marked partial.

    Raises:
        PreconditionError: the family is not compatible
        ConsistencyError: the two answers disagree
    """
    family = _members(family)
    n = family.n
    decomposition = is_hajos_family(family, shared=False)
    certificate: Dict[str, object] = {"kind": "krasner_equivalence", "n": n,
                                      "hajos": decomposition.status.value}
    if decomposition.holds:
        chain: FamilyHajosChain = decomposition.certificate
        certificate["chain"] = chain.to_dict()
        certificate["chain_border"] = chain_border((step.t, step.side) for step in chain.steps).to_dict()

    if n > krasner_max_n:
        toolkit_logger.log_envelope("krasner_border_equivalence", krasner_max_n, n)
        return _partial(decomposition, certificate, f"Krasner path skipped for n > {krasner_max_n}")

    krasner = enumerate_krasner(n, krasner_max_n)
    candidates = [kf for kf in krasner if border_check_family(kf.pair.P, kf.pair.Q, family)]
    certificate["krasner_checked"] = len(krasner)
    found = None
    if candidates:
        try:
            stable = stable_closure(family, closure_cap)
        except EnvelopeExceededError as e:
            return _partial(decomposition, certificate, str(e))
        certificate["closure_size"] = len(stable)
        found = next((kf for kf in candidates if border_check_family(kf.pair.P, kf.pair.Q, stable)), None)
        if decomposition.holds:
            border = chain_border((step.t, step.side) for step in decomposition.certificate.steps)
            if not (is_krasner(ResidueSet.reduced(n, border.P), ResidueSet.reduced(n, border.Q))
                    and border_check_family(border.P, border.Q, stable)):
                raise ConsistencyError(f"Border {border} built from the reduction chain fails on the closure")

    if (found is not None) != decomposition.holds:
        raise ConsistencyError(
            f"Reduction says {decomposition.status.value}, Krasner search says "
            f"{'yes' if found is not None else 'no'}")
    if found is None:
        toolkit_logger.log_verdict("krasner_border_equivalence", "no", f"n={n}")
        return Verdict.no(certificate, reason="no Krasner factorization borders the stable closure")
    certificate["krasner"] = found.to_dict()
    toolkit_logger.log_verdict("krasner_border_equivalence", "yes", str(found.pair))
    return Verdict.yes(certificate)


def _partial(decomposition: Verdict, certificate: Dict[str, object], reason: str) -> Verdict:
    certificate["partial"] = True
    return Verdict(decomposition.status, certificate, reason=reason)


def krasner_border_of(Y: BayonetSet, krasner_max_n: int = DEFAULT_KRASNER_MAX_N) -> Optional[FactorizationPair]:
    """The first Krasner factorization of size n bordering Y, or None"""
    for kf in enumerate_krasner(Y.n, krasner_max_n):
        if border_check(kf.pair.P, kf.pair.Q, Y):
            return kf.pair
    return None


def count_hajos_prime(p: int) -> int:
    """Number of Hajós p-cbc for a prime p: 2 p^p - p!"""
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime")
    return 2 * p ** p - factorial(p)
