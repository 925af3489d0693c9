import heapq
import logging
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import InvalidInputError
from src.models.verdicts import Verdict
from src.models.words import (AmbiguityWitness, FiniteCode, as_word_list,
                              parse_bayonet)
from src.utils.logger import ToolkitLogger

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

WordsLike = Union[FiniteCode, Iterable[str]]


def _code_words(c: WordsLike) -> List[str]:
    words = as_word_list(c)
    if not words:
        raise InvalidInputError("Expected a nonempty set of words")
    if "" in words:
        raise InvalidInputError("The empty word cannot belong to a code")
    return words


def is_code(c: WordsLike) -> Verdict:
    """
    Decide unique decipherability with the dangling-suffix iteration

    States are dangling suffixes reached by two competing factorizations.
    They are explored cheapest first, the cost being the length of the longer
    concatenation, so the first time the empty suffix is reached the two
    factorizations spell the shortest ambiguous word. Ties are broken on the
    factorizations themselves so the witness is deterministic.

    Returns:
        Verdict.yes() for a code, Verdict.no(AmbiguityWitness) otherwise
    """
    words = _code_words(c)

    # (cost, left, right, dangling, ahead_is_right)
    heap: List[Tuple[int, Tuple[str, ...], Tuple[str, ...], str, bool]] = []
    for u in words:
        for v in words:
            if u != v and v.startswith(u):
                heapq.heappush(heap, (len(v), (u,), (v,), v[len(u):], True))

    settled = set()
    explored = 0
    while heap:
        cost, left, right, dangling, ahead_is_right = heapq.heappop(heap)
        if dangling == "":
            witness = AmbiguityWitness(left, right)
            toolkit_logger.log_verdict("is_code", "no", str(witness))
            return Verdict.no(witness)
        if dangling in settled:
            continue
        settled.add(dangling)
        explored += 1

        for w in words:
            if w == dangling or dangling.startswith(w):
                # behind side catches up by w and stays behind (or ties)
                next_dangling = dangling[len(w):]
                next_ahead = ahead_is_right
                next_cost = cost
            elif w.startswith(dangling):
                # behind side overtakes
                next_dangling = w[len(dangling):]
                next_ahead = not ahead_is_right
                next_cost = cost + len(w) - len(dangling)
            else:
                continue
            if ahead_is_right:
                next_left, next_right = left + (w,), right
            else:
                next_left, next_right = left, right + (w,)
            heapq.heappush(heap, (next_cost, next_left, next_right, next_dangling, next_ahead))

    toolkit_logger.log_search("is_code", explored, "dangling suffixes closed")
    return Verdict.yes()


def _no_word_extends(words: Sequence[str], extends) -> bool:
    for index, word in enumerate(words):
        for other_index, other in enumerate(words):
            if index != other_index and extends(other, word):
                return False
    return True


def is_prefix_set(c: WordsLike) -> bool:
    """True when no word is a prefix of another word of the set"""
    return _no_word_extends(_code_words(c), str.startswith)


def is_suffix_set(c: WordsLike) -> bool:
    """True when no word is a suffix of another word of the set"""
    return _no_word_extends(_code_words(c), str.endswith)


def substitute(words: WordsLike, omega: str, letter: str = "b") -> FiniteCode:
    """Replace the central letter of every a^i b a^j by omega"""
    source = as_word_list(words)
    substituted = []
    for word in source:
        i, j = parse_bayonet(word, letter)
        substituted.append("a" * i + omega + "a" * j)
    result = FiniteCode.from_words(substituted)
    if len(result) != len(source):
        logger.warning(f"Substitution by {omega!r} merged {len(source) - len(result)} words")
    return result


def factorize(word: str, c: WordsLike) -> Optional[Tuple[str, ...]]:
    """A factorization of word over c, or None if word is not in c*"""
    words = tuple(_code_words(c))

    @lru_cache(maxsize=None)
    def tail(position: int) -> Optional[Tuple[str, ...]]:
        if position == len(word):
            return ()
        for piece in words:
            if word.startswith(piece, position):
                rest = tail(position + len(piece))
                if rest is not None:
                    return (piece,) + rest
        return None

    return tail(0)


def reverse_code(c: WordsLike) -> FiniteCode:
    """Word lists and FiniteCode alike; see FiniteCode.reversed"""
    code = c if isinstance(c, FiniteCode) else FiniteCode.from_words(as_word_list(c))
    return code.reversed()
