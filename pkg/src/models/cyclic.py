from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, Tuple

from src.errors import InvalidInputError


def full_mask(n: int) -> int:
    return (1 << n) - 1


def rotate_mask(mask: int, k: int, n: int) -> int:
    """Bitmask of {s + k mod n : s in mask}"""
    k %= n
    if k == 0:
        return mask
    return ((mask << k) | (mask >> (n - k))) & full_mask(n)


def mask_elements(mask: int) -> Tuple[int, ...]:
    elements = []
    index = 0
    while mask:
        if mask & 1:
            elements.append(index)
        mask >>= 1
        index += 1
    return tuple(elements)


@dataclass(frozen=True)
class ResidueSet:
    """Subset of Z_n stored as an n-bit mask"""
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"Modulus must be >= 1, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidInputError(f"Mask {self.mask} has elements outside Z_{self.n}")

    @classmethod
    def of(cls, n: int, elements: Iterable[int]) -> 'ResidueSet':
        """Strict constructor: every element must already lie in [0, n)"""
        mask = 0
        for element in elements:
            if not 0 <= element < n:
                raise InvalidInputError(f"Element {element} is not in [0, {n})")
            mask |= 1 << element
        return cls(n, mask)

    @classmethod
    def reduced(cls, n: int, elements: Iterable[int]) -> 'ResidueSet':
        """Elements are taken mod n"""
        mask = 0
        for element in elements:
            mask |= 1 << (element % n)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> 'ResidueSet':
        return cls(n, full_mask(n))

    @property
    def elements(self) -> Tuple[int, ...]:
        return mask_elements(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, element: object) -> bool:
        return isinstance(element, int) and 0 <= element < self.n and bool(self.mask >> element & 1)

    def shift(self, k: int) -> 'ResidueSet':
        return ResidueSet(self.n, rotate_mask(self.mask, k, self.n))

    def scale(self, d: int) -> 'ResidueSet':
        return ResidueSet.reduced(self.n, (d * element for element in self.elements))

    def is_periodic(self, m: int) -> bool:
        return rotate_mask(self.mask, m, self.n) == self.mask

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "elements": list(self.elements)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ResidueSet':
        return cls.of(data["n"], data["elements"])

    def __str__(self) -> str:
        return "{" + ",".join(str(element) for element in self.elements) + "}"


class FactorSide(Enum):
    P = "P"
    Q = "Q"


@dataclass(frozen=True)
class FactorizationPair:
    """Ordered pair (P, Q) of subsets of Z_n"""
    n: int
    P: ResidueSet
    Q: ResidueSet

    def __post_init__(self):
        if self.P.n != self.n or self.Q.n != self.n:
            raise InvalidInputError("P and Q must live in the same Z_n")

    @classmethod
    def of(cls, n: int, P: Iterable[int], Q: Iterable[int]) -> 'FactorizationPair':
        return cls(n, ResidueSet.of(n, P), ResidueSet.of(n, Q))

    def swapped(self) -> 'FactorizationPair':
        return FactorizationPair(self.n, self.Q, self.P)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "P": list(self.P.elements), "Q": list(self.Q.elements)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FactorizationPair':
        return cls.of(data["n"], data["P"], data["Q"])

    def __str__(self) -> str:
        return f"({self.P}, {self.Q})"


@dataclass(frozen=True)
class KrasnerChain:
    """Factors t_1..t_k of n; swapped means the pair is read as (V, U)"""
    factors: Tuple[int, ...]
    swapped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {"factors": list(self.factors), "swapped": self.swapped}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'KrasnerChain':
        return cls(tuple(data["factors"]), bool(data.get("swapped", False)))


@dataclass(frozen=True)
class KrasnerFactorization:
    pair: FactorizationPair
    chain: KrasnerChain

    def to_dict(self) -> Dict[str, Any]:
        return {"factorization": self.pair.to_dict(), "chain": self.chain.to_dict()}


@dataclass(frozen=True)
class HajosFactorizationStep:
    period: int
    side: FactorSide

    def to_dict(self) -> Dict[str, Any]:
        return {"period": self.period, "side": self.side.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HajosFactorizationStep':
        return cls(int(data["period"]), FactorSide(data["side"]))


@dataclass(frozen=True)
class HajosFactorizationChain:
    """Periodic reductions taking a factorization of size n down to size 1"""
    steps: Tuple[HajosFactorizationStep, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"steps": [step.to_dict() for step in self.steps]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HajosFactorizationChain':
        return cls(tuple(HajosFactorizationStep.from_dict(step) for step in data["steps"]))
