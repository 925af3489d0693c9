import re
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from src.errors import InvalidInputError

WORD_PATTERN = re.compile(r"^[a-z]*$")
BAYONET_PATTERN = re.compile(r"^(a*)([b-z])(a*)$")


def validate_word(word: str) -> str:
    """Check that a word only uses lowercase letters"""
    if not isinstance(word, str) or not WORD_PATTERN.match(word):
        raise InvalidInputError(f"Invalid word {word!r}: letters must be in a-z")
    return word


def word_sort_key(word: str) -> Tuple[int, str]:
    return (len(word), word)


def bayonet_word(i: int, j: int, letter: str = "b") -> str:
    """The word a^i letter a^j"""
    if i < 0 or j < 0:
        raise InvalidInputError(f"Negative exponent in ({i}, {j})")
    return "a" * i + letter + "a" * j


def parse_bayonet(word: str, letter: str = "b") -> Tuple[int, int]:
    """Exponents (i, j) of a word a^i letter a^j"""
    match = BAYONET_PATTERN.match(word)
    if not match or match.group(2) != letter:
        raise InvalidInputError(f"Word {word!r} is not of the form a^i {letter} a^j")
    return len(match.group(1)), len(match.group(3))


@dataclass(frozen=True)
class FiniteCode:
    """Finite set of words, kept sorted by length then lexicographically"""
    words: Tuple[str, ...]

    @classmethod
    def from_words(cls, words: Iterable[str]) -> 'FiniteCode':
        unique = {validate_word(word) for word in words}
        return cls(tuple(sorted(unique, key=word_sort_key)))

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self.words

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(sorted({letter for word in self.words for letter in word}))

    @property
    def total_length(self) -> int:
        return sum(len(word) for word in self.words)

    def reversed(self) -> 'FiniteCode':
        return FiniteCode.from_words(word[::-1] for word in self.words)

    def to_dict(self) -> Dict[str, Any]:
        return {"words": list(self.words)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FiniteCode':
        return cls.from_words(data["words"])


@dataclass(frozen=True)
class AmbiguityWitness:
    """Two distinct factorizations of the same word"""
    left: Tuple[str, ...]
    right: Tuple[str, ...]

    @property
    def word(self) -> str:
        return "".join(self.left)

    def verify(self, code: Iterable[str]) -> bool:
        """True when both sides concatenate to the same word using only code words"""
        members = set(code)
        if self.left == self.right:
            return False
        if "".join(self.left) != "".join(self.right):
            return False
        return all(word in members for word in self.left + self.right)

    def to_dict(self) -> Dict[str, Any]:
        return {"left": list(self.left), "right": list(self.right)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AmbiguityWitness':
        return cls(tuple(data["left"]), tuple(data["right"]))

    def __str__(self) -> str:
        return f"{'·'.join(self.left)} = {'·'.join(self.right)}"


def as_word_list(words: Iterable[str]) -> List[str]:
    if isinstance(words, FiniteCode):
        return list(words.words)
    return sorted({validate_word(word) for word in words}, key=word_sort_key)


def pairs_to_words(pairs: Sequence[Tuple[int, int]], letter: str = "b") -> List[str]:
    return [bayonet_word(i, j, letter) for i, j in pairs]
