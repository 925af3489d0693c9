import logging
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from src.config import DEFAULT_PREFIX_SUFFIX_DEPTH, DEFAULT_PREFIX_SUFFIX_SPLIT_CAP
from src.errors import InvalidInputError, PreconditionError
from src.models.transforms import Direction, PrefixSuffixChain
from src.models.verdicts import Verdict
from src.models.words import FiniteCode, word_sort_key
from src.utils.logger import ToolkitLogger
from src.words.codes import WordsLike, factorize, is_code

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

Letters = Tuple[str, ...]
Chain = Tuple[Tuple[FiniteCode, ...], Tuple[Direction, ...]]


def _as_code(c: WordsLike) -> FiniteCode:
    return c if isinstance(c, FiniteCode) else FiniteCode.from_words(c)


def is_alphabet(c: FiniteCode) -> bool:
    return all(len(word) == 1 for word in c.words)


def letter_sequences(code: FiniteCode, base: FiniteCode) -> Optional[List[Letters]]:
    """Every word of code written over base, or None if some word is not in base*"""
    sequences = []
    for word in code.words:
        pieces = factorize(word, base)
        if pieces is None:
            return None
        sequences.append(pieces)
    return sequences


def _no_extension(sequences: Sequence[Letters], suffix: bool) -> bool:
    if len(set(sequences)) != len(sequences):
        return False
    proper = set()
    for sequence in sequences:
        for cut in range(1, len(sequence)):
            proper.add(sequence[cut:] if suffix else sequence[:cut])
    return not any(sequence in proper for sequence in sequences)


def direction_over(code: FiniteCode, base: FiniteCode) -> Optional[Direction]:
    """PREFIX or SUFFIX when code is such a code over base (prefix first), else None"""
    sequences = letter_sequences(code, base)
    if sequences is None:
        return None
    if _no_extension(sequences, suffix=False):
        return Direction.PREFIX
    if _no_extension(sequences, suffix=True):
        return Direction.SUFFIX
    return None


def is_over(code: FiniteCode, base: FiniteCode, direction: Direction) -> bool:
    sequences = letter_sequences(code, base)
    return sequences is not None and _no_extension(sequences, suffix=direction is Direction.SUFFIX)


def validate_chain(chain: PrefixSuffixChain, over: Optional[WordsLike] = None) -> bool:
    """
    Re-check a chain level by level

    Each lower level must be a code and each level a prefix (or suffix)
    code over the next one; the last level is a set of letters, or equals
    `over` when given.
    """
    levels = chain.levels
    if not levels or len(chain.directions) != len(levels) - 1:
        logger.debug("Chain shape is inconsistent")
        return False
    bottom = levels[-1]
    if over is None:
        if not is_alphabet(bottom):
            logger.debug(f"Bottom level {bottom.words} is not a set of letters")
            return False
    elif bottom != _as_code(over):
        logger.debug(f"Bottom level {bottom.words} differs from the expected base")
        return False
    for index, direction in enumerate(chain.directions):
        upper, lower = levels[index], levels[index + 1]
        if not is_code(lower).holds:
            logger.debug(f"Level {index + 1} is not a code")
            return False
        if not is_over(upper, lower, direction):
            logger.debug(f"Level {index} is not a {direction.value} code over level {index + 1}")
            return False
    return True


def restrict_chain(chain: PrefixSuffixChain, subset: WordsLike) -> PrefixSuffixChain:
    """The chain of a subset of the top level, which stays a prefix (suffix) code over the next level"""
    top = _as_code(subset)
    if not set(top.words) <= set(chain.levels[0].words):
        raise InvalidInputError("Words outside the top level of the chain")
    if not chain.directions:
        return PrefixSuffixChain((top,), ())
    return PrefixSuffixChain((top,) + chain.levels[1:], chain.directions)


def mirror_chain(chain: PrefixSuffixChain) -> PrefixSuffixChain:
    """Reverse every word; prefix and suffix steps trade places"""
    swap = {Direction.PREFIX: Direction.SUFFIX, Direction.SUFFIX: Direction.PREFIX}
    return PrefixSuffixChain(tuple(level.reversed() for level in chain.levels),
                             tuple(swap[direction] for direction in chain.directions))


def _splits(word: str) -> Iterator[Tuple[str, ...]]:
    """Every way of cutting word into nonempty pieces"""
    if len(word) == 1:
        yield (word,)
        return
    for cuts in product((False, True), repeat=len(word) - 1):
        pieces, start = [], 0
        for position, cut in enumerate(cuts, start=1):
            if cut:
                pieces.append(word[start:position])
                start = position
        pieces.append(word[start:])
        yield tuple(pieces)


class _PrefixSuffixSearch:
    """
    Search for a chain down to the letters

    A candidate level below c is the set of pieces of one cut of every word
    of c; any level c is a prefix or suffix code over can be shrunk to the
    pieces it uses, so this loses nothing. Each step lowers the total length
    or raises the number of words, hence every branch ends.
    """

    def __init__(self, split_cap: int):
        self.split_cap = split_cap
        self.splits = 0
        self.capped = False
        self.failed: Set[FrozenSet[str]] = set()

    def candidates(self, c: FiniteCode) -> List[FiniteCode]:
        seen: Dict[FrozenSet[str], FiniteCode] = {}
        own = frozenset(c.words)
        for choice in product(*(list(_splits(word)) for word in c.words)):
            self.splits += 1
            if self.splits > self.split_cap:
                self.capped = True
                break
            pieces = frozenset(piece for cut in choice for piece in cut)
            if pieces != own and pieces not in seen:
                seen[pieces] = FiniteCode.from_words(pieces)
        return sorted(seen.values(), key=lambda level: (level.total_length, len(level),
                                                        [word_sort_key(word) for word in level.words]))

    def search(self, c: FiniteCode, depth: Optional[int]) -> Tuple[Optional[Chain], bool]:
        """(chain or None, whether the subtree was fully explored); depth None is unbounded"""
        if is_alphabet(c):
            return ((c,), ()), True
        key = frozenset(c.words)
        if key in self.failed:
            return None, True
        if depth == 0:
            return None, False
        candidates = self.candidates(c)
        complete = not self.capped
        for lower in candidates:
            if not is_code(lower).holds:
                continue
            direction = direction_over(c, lower)
            if direction is None:
                continue
            found, explored = self.search(lower, None if depth is None else depth - 1)
            if found is not None:
                levels, directions = found
                return ((c,) + levels, (direction,) + directions), True
            complete = complete and explored
        if complete:
            self.failed.add(key)
        return None, complete


def is_prefix_suffix(c: WordsLike, depth_bound: int = DEFAULT_PREFIX_SUFFIX_DEPTH,
                     split_cap: int = DEFAULT_PREFIX_SUFFIX_SPLIT_CAP) -> Verdict:
    """
    Look for a chain of prefix and suffix steps from c down to its letters

    Chains of length up to depth_bound are searched shortest first. When
    that fails only because of the bound, an unbounded depth-first pass
    settles the question. No is exhaustive; Unknown means the split cap
    was hit.

    Raises:
        PreconditionError: c is not a code
    """
    code = _as_code(c)
    verdict = is_code(code)
    if not verdict.holds:
        raise PreconditionError("The input set is not a code", verdict.certificate.to_dict())
    if depth_bound < 0:
        raise InvalidInputError(f"Depth bound must be >= 0, got {depth_bound}")

    search = _PrefixSuffixSearch(split_cap)
    found, complete = None, False
    for depth in range(depth_bound + 1):
        found, complete = search.search(code, depth)
        if found is not None or complete:
            break
    if found is None and not complete and not search.capped:
        logger.debug(f"No chain of length <= {depth_bound}, searching deeper")
        found, complete = search.search(code, None)

    if found is not None:
        chain = PrefixSuffixChain(*found)
        toolkit_logger.log_verdict("is_prefix_suffix", "yes", f"depth {chain.depth}")
        return Verdict.yes(chain)
    toolkit_logger.log_search("is_prefix_suffix", search.splits, f"depth bound {depth_bound}")
    summary = {"kind": "prefix_suffix_exhaustion", "depth_bound": depth_bound, "splits": search.splits}
    if not complete:
        toolkit_logger.log_envelope("is_prefix_suffix", split_cap, search.splits)
        return Verdict.unknown(summary, reason="the split cap cut the search")
    return Verdict.no(summary, reason="no chain of prefix and suffix steps reaches the letters")
