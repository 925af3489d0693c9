from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from src.models.verdicts import VerdictStatus
from src.models.words import AmbiguityWitness, FiniteCode


class Direction(Enum):
    PREFIX = "prefix"
    SUFFIX = "suffix"


@dataclass(frozen=True)
class PhiParams:
    d1: int
    d2: int

    def to_dict(self) -> Dict[str, Any]:
        return {"d1": self.d1, "d2": self.d2}


@dataclass(frozen=True)
class PrefixSuffixChain:
    """levels[0] is the target, levels[-1] a set of letters; directions[i] links levels i and i+1"""
    levels: Tuple[FiniteCode, ...]
    directions: Tuple[Direction, ...]

    @property
    def depth(self) -> int:
        return len(self.directions)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "prefix_suffix_chain",
            "levels": [list(level.words) for level in self.levels],
            "directions": [direction.value for direction in self.directions],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PrefixSuffixChain':
        return cls(
            tuple(FiniteCode.from_words(level) for level in data["levels"]),
            tuple(Direction(direction) for direction in data["directions"]),
        )


@dataclass
class DivisibilityReport:
    left_forced_primes: Tuple[int, ...] = ()
    right_forced_primes: Tuple[int, ...] = ()
    n_divisor: int = 1
    left_witnesses: Dict[int, AmbiguityWitness] = field(default_factory=dict)
    right_witnesses: Dict[int, AmbiguityWitness] = field(default_factory=dict)
    prime_bound: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "divisibility",
            "prime_bound": self.prime_bound,
            "left_forced_primes": list(self.left_forced_primes),
            "right_forced_primes": list(self.right_forced_primes),
            "n_divisor": self.n_divisor,
            "left_witnesses": {str(p): w.to_dict() for p, w in sorted(self.left_witnesses.items())},
            "right_witnesses": {str(p): w.to_dict() for p, w in sorted(self.right_witnesses.items())},
        }


@dataclass
class InclusionReport:
    """Statements of the inclusion equivalence, evaluated independently where possible"""
    n: int
    omega: str
    statuses: Dict[str, VerdictStatus] = field(default_factory=dict)
    evidence: Dict[str, Any] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        definite = {status for status in self.statuses.values() if status is not VerdictStatus.UNKNOWN}
        return len(definite) <= 1

    @property
    def overall(self) -> VerdictStatus:
        definite = [status for status in self.statuses.values() if status is not VerdictStatus.UNKNOWN]
        if not definite or not self.agree:
            return VerdictStatus.UNKNOWN
        return definite[0]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "inclusion_equivalence",
            "n": self.n,
            "omega": self.omega,
            "statements": {name: status.value for name, status in self.statuses.items()},
            "agree": self.agree,
            "evidence": self.evidence,
        }


@dataclass(frozen=True)
class CompletionResult:
    code: FiniteCode
    chain: PrefixSuffixChain
    notes: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {"kind": "completion", "code": list(self.code.words), "chain": self.chain.to_dict()}
        if self.notes:
            data["notes"] = self.notes
        return data
