import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from src.models.cbc import (BayonetSet, CbcFamily, CompatibilityGraph, EdgeLabel,
                            IncompatibilityCertificate, Pair)
from src.models.verdicts import Verdict
from src.models.words import AmbiguityWitness, bayonet_word, word_sort_key
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)


def edge_of(first: Pair, second: Pair, n: int) -> Tuple[int, int]:
    """Edge witnessed by two distinct words a^i1 b a^j1, a^i2 b a^j2"""
    (i1, j1), (i2, j2) = first, second
    return (i1 - i2) % n, (j2 - j1) % n


def member_adjacency(X: BayonetSet) -> List[int]:
    """adjacency[k] is the bitmask of successors of k in the graph of {X}"""
    n = X.n
    adjacency = [0] * n
    pairs = X.pairs
    for first in pairs:
        for second in pairs:
            if first != second:
                source, target = edge_of(first, second, n)
                adjacency[source] |= 1 << target
    return adjacency


def add_word_edges(adjacency: List[int], pairs: Sequence[Pair], word: Pair, n: int) -> List[int]:
    """Copy of adjacency with the edges between word and every pair already present"""
    updated = list(adjacency)
    for other in pairs:
        source, target = edge_of(word, other, n)
        updated[source] |= 1 << target
        source, target = edge_of(other, word, n)
        updated[source] |= 1 << target
    return updated


def zero_cycle_free(adjacency: Sequence[int], n: int) -> bool:
    """No nonempty path from 0 back to 0"""
    reached = 0
    frontier = adjacency[0]
    while frontier:
        if frontier & 1:
            return False
        reached |= frontier
        successors = 0
        mask = frontier
        while mask:
            low = mask & -mask
            successors |= adjacency[low.bit_length() - 1]
            mask ^= low
        frontier = successors & ~reached
    return True


def _members(family) -> List[BayonetSet]:
    if isinstance(family, CbcFamily):
        return list(family.members)
    return list(family)


def compatibility_graph(family) -> CompatibilityGraph:
    """
    Graph on Z_n with an edge ((i1 - i2) mod n, (j2 - j1) mod n) for every
    ordered pair of distinct words taken in the same member

    Each edge keeps the smallest (member, first, second) witnessing it.
    """
    members = _members(family)
    n = members[0].n
    labels: Dict[Tuple[int, int], EdgeLabel] = {}
    for index, member in enumerate(members):
        pairs = member.pairs
        for first in pairs:
            for second in pairs:
                if first == second:
                    continue
                edge = edge_of(first, second, n)
                if edge not in labels:
                    labels[edge] = EdgeLabel(index, first, second)
    return CompatibilityGraph(n, tuple(sorted(labels)), labels)


def to_networkx(graph: CompatibilityGraph) -> nx.DiGraph:
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(graph.n))
    digraph.add_edges_from(graph.edges)
    return digraph


def shortest_zero_cycle(graph: CompatibilityGraph) -> Optional[Tuple[int, ...]]:
    """Shortest nonempty closed path through 0, smallest first step on ties"""
    digraph = to_networkx(graph)
    best: Optional[List[int]] = None
    for successor in sorted(digraph.successors(0)):
        if successor == 0:
            return (0, 0)
        if not nx.has_path(digraph, successor, 0):
            continue
        path = [0] + nx.shortest_path(digraph, successor, 0)
        if best is None or len(path) < len(best):
            best = path
    return tuple(best) if best else None


def _pad(count: int, n: int) -> List[str]:
    return ["a" * n] * count


def witness_from_path(labels: Sequence[EdgeLabel], n: int) -> AmbiguityWitness:
    """
    Two factorizations over {a^n} and the labelled words with their b's aligned

    Step s puts first_s on the left and second_s on the right.
    """
    return align_with_powers([(label.first, label.second) for label in labels], n)


def align_with_powers(steps: Sequence[Tuple[Pair, Pair]], n: int) -> AmbiguityWitness:
    """
    Line up the s-th left and right bayonet words on the s-th b

    The a-runs between consecutive b's must agree mod n on both sides; the
    shorter run is evened out with a^n tokens.
    """
    left: List[str] = []
    right: List[str] = []
    previous_left = previous_right = 0
    for (i1, j1), (i2, j2) in steps:
        gap_left, gap_right = previous_left + i1, previous_right + i2
        left += _pad(max(gap_right - gap_left, 0) // n, n)
        right += _pad(max(gap_left - gap_right, 0) // n, n)
        left.append(bayonet_word(i1, j1))
        right.append(bayonet_word(i2, j2))
        previous_left, previous_right = j1, j2
    left += _pad(max(previous_right - previous_left, 0) // n, n)
    right += _pad(max(previous_left - previous_right, 0) // n, n)
    return AmbiguityWitness(tuple(left), tuple(right))


def incompatibility_certificate(family, n: int) -> Optional[IncompatibilityCertificate]:
    graph = compatibility_graph(family)
    path = shortest_zero_cycle(graph)
    if path is None:
        return None
    labels = tuple(graph.labels[(path[s], path[s + 1])] for s in range(len(path) - 1))
    witness = witness_from_path(labels, n)
    words = {"a" * n}
    for member in _members(family):
        words.update(member.words())
    code = tuple(sorted(words, key=word_sort_key))
    if not witness.verify(code):
        logger.error(f"Reconstructed witness {witness} does not re-verify")
    return IncompatibilityCertificate(n, path, labels, witness, code)


def is_compatible(family) -> Verdict:
    """Yes when the compatibility graph has no nonempty path from 0 to 0"""
    members = _members(family)
    n = members[0].n
    adjacency = family_adjacency(members, n)
    if zero_cycle_free(adjacency, n):
        return Verdict.yes()
    certificate = incompatibility_certificate(members, n)
    toolkit_logger.log_verdict("is_compatible", "no", f"path {certificate.path}")
    return Verdict.no(certificate, reason="nonempty path from 0 to 0")


def family_adjacency(members: Iterable[BayonetSet], n: int) -> List[int]:
    adjacency = [0] * n
    for member in members:
        for source, targets in enumerate(member_adjacency(member)):
            adjacency[source] |= targets
    return adjacency
