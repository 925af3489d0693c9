import logging
from collections import deque
from typing import List

from src.cbc.compatibility import is_compatible, member_adjacency, zero_cycle_free
from src.cbc.core import compose
from src.config import DEFAULT_STABLE_CLOSURE_CAP
from src.errors import ConsistencyError, EnvelopeExceededError, PreconditionError
from src.models.cbc import BayonetSet, Cbc, CbcFamily
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)


def stable_closure(family: CbcFamily, cap: int = DEFAULT_STABLE_CLOSURE_CAP) -> CbcFamily:
    """
    Least stable family containing the input

    Worklist over members: each newly found member is composed with every
    member known so far, on both sides and for every residue.

    Raises:
        PreconditionError: the family is not compatible (certificate attached)
        EnvelopeExceededError: more than cap members were produced
    """
    verdict = is_compatible(family)
    if not verdict.holds:
        raise PreconditionError("Only compatible families have a stable closure",
                                verdict.certificate.to_dict())
    n = family.n
    known: List[BayonetSet] = list(family.members)
    seen = set(known)
    queue = deque(known)
    while queue:
        current = queue.popleft()
        for other in list(known):
            for r in range(n):
                for candidate in (compose(current, other, r), compose(other, current, r)):
                    if candidate in seen:
                        continue
                    if len(candidate) != n or not zero_cycle_free(member_adjacency(candidate), n):
                        raise ConsistencyError(f"Composition {candidate} of a compatible family is not an {n}-cbc")
                    seen.add(candidate)
                    known.append(candidate)
                    queue.append(candidate)
                    if len(known) > cap:
                        toolkit_logger.log_envelope("stable_closure", cap, len(known))
                        raise EnvelopeExceededError(f"Stable closure exceeds {cap} members", cap, len(known))
    toolkit_logger.log_search("stable_closure", len(known), f"from {len(family)} members")
    return CbcFamily.of(Cbc(member.n, member.mask) for member in known)


def is_stable(family: CbcFamily) -> bool:
    members = set(family.members)
    for X in family.members:
        for Y in family.members:
            for r in range(family.n):
                if compose(X, Y, r) not in members:
                    return False
    return True
