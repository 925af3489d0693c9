from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from src.errors import InvalidInputError
from src.models.words import AmbiguityWitness, bayonet_word

Pair = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class BayonetSet:
    """Subset of a^[n] b a^[n]; pair (i, j) is bit i*n + j of the mask"""
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"Modulus must be >= 1, got {self.n}")
        if self.mask < 0 or self.mask >> (self.n * self.n):
            raise InvalidInputError(f"Mask has pairs outside [0, {self.n})^2")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> 'BayonetSet':
        return cls(n, encode_pairs(n, pairs))

    @property
    def pairs(self) -> Tuple[Pair, ...]:
        n = self.n
        result = []
        mask = self.mask
        index = 0
        while mask:
            if mask & 1:
                result.append(divmod(index, n))
            mask >>= 1
            index += 1
        return tuple(result)

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        i, j = pair
        return 0 <= i < self.n and 0 <= j < self.n and bool(self.mask >> (i * self.n + j) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BayonetSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __lt__(self, other: 'BayonetSet') -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> Tuple[int, Tuple[Pair, ...]]:
        return (self.n, self.pairs)

    def issubset(self, other: 'BayonetSet') -> bool:
        return self.n == other.n and self.mask & ~other.mask == 0

    def words(self, letter: str = "b") -> List[str]:
        return [bayonet_word(i, j, letter) for i, j in self.pairs]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "pairs": [list(pair) for pair in self.pairs]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'BayonetSet':
        return cls.from_pairs(int(data["n"]), (tuple(pair) for pair in data["pairs"]))

    def __str__(self) -> str:
        return "{" + ", ".join(self.words()) + "}"


class Cbc(BayonetSet):
    """A BayonetSet known to be an n-complete bayonet code

    Build instances through src.cbc.core.make_cbc, which checks the size and
    the codehood of {a^n} together with the words.
    """


def encode_pairs(n: int, pairs: Iterable[Pair]) -> int:
    mask = 0
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInputError(f"Pair ({i}, {j}) has a coordinate outside [0, {n})")
        mask |= 1 << (i * n + j)
    return mask


@dataclass(frozen=True)
class CbcFamily:
    """Finite set of n-cbc, members sorted so member ids are stable"""
    n: int
    members: Tuple[Cbc, ...]

    @classmethod
    def of(cls, members: Iterable[BayonetSet]) -> 'CbcFamily':
        """Members not already typed Cbc are checked; PreconditionError names the first that fails"""
        from src.cbc.core import make_cbc

        unique = sorted(set(members), key=lambda member: member.sort_key)
        if not unique:
            raise InvalidInputError("A family needs at least one member")
        n = unique[0].n
        if any(member.n != n for member in unique):
            raise InvalidInputError("All members of a family must share n")
        return cls(n, tuple(make_cbc(n, member) for member in unique))

    def __iter__(self) -> Iterator[Cbc]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, member: object) -> bool:
        return member in self.members

    def index(self, member: BayonetSet) -> int:
        return self.members.index(member)

    def with_member(self, member: BayonetSet) -> 'CbcFamily':
        return CbcFamily.of(self.members + (member,))

    def to_dict(self) -> List[Dict[str, Any]]:
        return [member.to_dict() for member in self.members]

    @classmethod
    def from_dict(cls, data: List[Dict[str, Any]]) -> 'CbcFamily':
        return cls.of(BayonetSet.from_dict(item) for item in data)


@dataclass(frozen=True)
class EdgeLabel:
    """Two distinct words of one member witnessing an edge k1 -> k2"""
    member: int
    first: Pair
    second: Pair

    def to_dict(self) -> Dict[str, Any]:
        return {"member": self.member, "first": list(self.first), "second": list(self.second)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EdgeLabel':
        return cls(int(data["member"]), tuple(data["first"]), tuple(data["second"]))


@dataclass(frozen=True)
class CompatibilityGraph:
    n: int
    edges: Tuple[Tuple[int, int], ...]
    labels: Dict[Tuple[int, int], EdgeLabel] = field(default_factory=dict, compare=False, hash=False)

    def successors(self, vertex: int) -> List[int]:
        return [target for source, target in self.edges if source == vertex]

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(edge) for edge in self.edges]}


@dataclass(frozen=True)
class IncompatibilityCertificate:
    """A nonempty 0 -> 0 path with one labelled edge per step and the word-level witness"""
    n: int
    path: Tuple[int, ...]
    labels: Tuple[EdgeLabel, ...]
    witness: Optional[AmbiguityWitness]
    code: Tuple[str, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "incompatibility",
            "n": self.n,
            "path": list(self.path),
            "edges": [label.to_dict() for label in self.labels],
            "witness": self.witness.to_dict() if self.witness else None,
            "code": list(self.code),
        }
