import logging
from typing import Iterable, Iterator, List, Sequence, Tuple

from src.cbc.compatibility import add_word_edges, member_adjacency, zero_cycle_free
from src.config import DEFAULT_MAX_ENUMERATION_N
from src.errors import EnvelopeExceededError, InvalidInputError
from src.models.cbc import Cbc, Pair, encode_pairs
from src.models.verdicts import Verdict
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)


def _check_envelope(n: int, max_n: int, operation: str) -> None:
    if n < 1:
        raise InvalidInputError(f"Modulus must be >= 1, got {n}")
    if n > max_n:
        toolkit_logger.log_envelope(operation, max_n, n)
        raise EnvelopeExceededError(f"{operation} supports n <= {max_n}", max_n, n)


def enumerate_cbc(n: int, max_n: int = DEFAULT_MAX_ENUMERATION_N) -> Iterator[Cbc]:
    """
    Every n-cbc once, in lexicographic order of their sorted pair lists

    Backtracking over the cells of [n]^2 in lexicographic order; a partial
    set is dropped as soon as its compatibility graph has a path 0 -> 0,
    since adding words only adds edges.
    """
    _check_envelope(n, max_n, "enumerate_cbc")
    cells = [(i, j) for i in range(n) for j in range(n)]
    total = len(cells)

    def extend(start: int, chosen: List[Pair], adjacency: List[int]) -> Iterator[Cbc]:
        if len(chosen) == n:
            yield Cbc(n, encode_pairs(n, chosen))
            return
        for index in range(start, total - (n - len(chosen)) + 1):
            cell = cells[index]
            updated = add_word_edges(adjacency, chosen, cell, n)
            if not zero_cycle_free(updated, n):
                continue
            chosen.append(cell)
            yield from extend(index + 1, chosen, updated)
            chosen.pop()

    yield from extend(0, [], [0] * n)


def count_cbc(n: int, max_n: int = DEFAULT_MAX_ENUMERATION_N) -> int:
    return sum(1 for _ in enumerate_cbc(n, max_n))


def joint_embeddability(required: Sequence[Iterable[Pair]], n: int,
                        max_n: int = DEFAULT_MAX_ENUMERATION_N) -> Verdict:
    """
    Look for one n-cbc per required pair set, forming together a compatible family

    Returns:
        Verdict.yes([Cbc, ...]) or Verdict.no(exhaustion summary)
    """
    _check_envelope(n, max_n, "joint_embeddability")
    masks = [encode_pairs(n, pairs) for pairs in required]
    if not masks:
        raise InvalidInputError("At least one required set is needed")

    candidates: List[List[Tuple[Cbc, List[int]]]] = [[] for _ in masks]
    for X in enumerate_cbc(n, max_n):
        adjacency = None
        for index, mask in enumerate(masks):
            if mask & ~X.mask == 0:
                if adjacency is None:
                    adjacency = member_adjacency(X)
                candidates[index].append((X, adjacency))
    counts = [len(group) for group in candidates]
    logger.debug(f"Candidate counts per required set: {counts}")

    checked = 0

    def search(level: int, adjacency: List[int], chosen: List[Cbc]):
        nonlocal checked
        if level == len(candidates):
            return list(chosen)
        for X, member_edges in candidates[level]:
            checked += 1
            merged = [a | b for a, b in zip(adjacency, member_edges)]
            if not zero_cycle_free(merged, n):
                continue
            chosen.append(X)
            found = search(level + 1, merged, chosen)
            chosen.pop()
            if found:
                return found
        return None

    found = search(0, [0] * n, [])
    summary = {
        "kind": "exhaustion",
        "n": n,
        "required": [[list(pair) for pair in _decode(mask, n)] for mask in masks],
        "candidate_counts": counts,
        "checked": checked,
    }
    if found:
        toolkit_logger.log_verdict("joint_embeddability", "yes", f"{len(found)} members")
        return Verdict.yes(found)
    toolkit_logger.log_verdict("joint_embeddability", "no", f"checked {checked} extensions")
    return Verdict.no(summary, reason="no compatible choice of cbc contains the required sets")


def _decode(mask: int, n: int) -> List[Pair]:
    return [divmod(index, n) for index in range(n * n) if mask >> index & 1]
