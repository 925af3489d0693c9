from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.errors import InvalidInputError
from src.models.cbc import BayonetSet, Cbc


class Side(Enum):
    DIRECT = "direct"
    DUAL = "dual"


@dataclass(frozen=True)
class HtParams:
    """Expansion of an n-cbc: shifts[l][s] moves row l of column s by shifts[l][s] * n"""
    base: Cbc
    t: int
    shifts: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.t < 1:
            raise InvalidInputError(f"Expansion factor must be >= 1, got {self.t}")
        if len(self.shifts) != len(self.base):
            raise InvalidInputError(
                f"Expected {len(self.base)} shift rows, got {len(self.shifts)}")
        for row in self.shifts:
            if len(row) != self.t or any(not 0 <= k < self.t for k in row):
                raise InvalidInputError(f"Shift row {row} must have {self.t} entries in [0, {self.t})")

    def to_dict(self) -> Dict[str, Any]:
        return {"base": self.base.to_dict(), "t": self.t, "shifts": [list(row) for row in self.shifts]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HtParams':
        base = BayonetSet.from_dict(data["base"])
        return cls(Cbc(base.n, base.mask), int(data["t"]),
                   tuple(tuple(int(k) for k in row) for row in data["shifts"]))


@dataclass(frozen=True)
class HajosStep:
    """Y in H_t(base) (direct) or dual(Y) in H_t(base) (dual)"""
    t: int
    side: Side
    shifts: Tuple[Tuple[int, ...], ...]
    base: Cbc

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "side": self.side.value,
            "shifts": [list(row) for row in self.shifts],
            "base": self.base.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HajosStep':
        base = BayonetSet.from_dict(data["base"])
        return cls(int(data["t"]), Side(data["side"]),
                   tuple(tuple(int(k) for k in row) for row in data["shifts"]),
                   Cbc(base.n, base.mask))

    def flipped(self) -> 'HajosStep':
        other = Side.DUAL if self.side is Side.DIRECT else Side.DIRECT
        return HajosStep(self.t, other, self.shifts, self.base)


@dataclass(frozen=True)
class HajosChain:
    """Steps listed from the target down to {b}"""
    steps: Tuple[HajosStep, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "hajos_chain", "steps": [step.to_dict() for step in self.steps]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'HajosChain':
        return cls(tuple(HajosStep.from_dict(step) for step in data["steps"]))


@dataclass(frozen=True)
class FamilyHajosStep:
    t: int
    side: Side

    def to_dict(self) -> Dict[str, Any]:
        return {"t": self.t, "side": self.side.value}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FamilyHajosStep':
        return cls(int(data["t"]), Side(data["side"]))


@dataclass(frozen=True)
class FamilyHajosChain:
    steps: Tuple[FamilyHajosStep, ...] = ()
    shared: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {"steps": [step.to_dict() for step in self.steps], "shared": self.shared}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'FamilyHajosChain':
        return cls(tuple(FamilyHajosStep.from_dict(step) for step in data["steps"]),
                   bool(data.get("shared", True)))


ASSIGNMENT_VALUES = ("R1", "R2")


@dataclass(frozen=True)
class NonHajosSpec:
    p1: int
    p2: int
    q1: int
    q2: int
    # element of L -> "R1" or "R2"; None means 0 -> R1 and every other element -> R2
    assignment: Optional[Tuple[Tuple[int, str], ...]] = None

    @property
    def n(self) -> int:
        return self.p1 * self.p2 * self.q1 * self.q2

    def assignment_map(self) -> Dict[int, str]:
        return dict(self.assignment) if self.assignment is not None else {}

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"p1": self.p1, "p2": self.p2, "q1": self.q1, "q2": self.q2}
        if self.assignment is not None:
            data["assignment"] = {str(element): value for element, value in self.assignment}
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'NonHajosSpec':
        assignment = data.get("assignment")
        items = None
        if assignment is not None:
            items = tuple(sorted((int(element), value) for element, value in assignment.items()))
        return cls(int(data["p1"]), int(data["p2"]), int(data["q1"]), int(data["q2"]), items)


@dataclass
class CounterexampleBundle:
    """The construction and every check run on it"""
    spec: NonHajosSpec
    L: Tuple[int, ...]
    R1: Tuple[int, ...]
    R2: Tuple[int, ...]
    cbc: Cbc
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def failed_checks(self) -> List[str]:
        return [name for name, passed in self.checks.items() if not passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "counterexample",
            "spec": self.spec.to_dict(),
            "L": list(self.L),
            "R1": list(self.R1),
            "R2": list(self.R2),
            "cbc": self.cbc.to_dict(),
            "checks": dict(self.checks),
            "details": dict(self.details),
        }
