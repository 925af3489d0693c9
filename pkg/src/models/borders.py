from dataclasses import dataclass
from typing import Any, Dict, Iterable, Tuple

from src.errors import InvalidInputError
from src.models.cbc import BayonetSet, Cbc
from src.models.cyclic import FactorizationPair


@dataclass(frozen=True)
class Border:
    """Pair of integer sets; values may leave [0, n) and are reduced when checked"""
    n: int
    P: Tuple[int, ...]
    Q: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError(f"Modulus must be >= 1, got {self.n}")

    @classmethod
    def of(cls, n: int, P: Iterable[int], Q: Iterable[int]) -> 'Border':
        return cls(n, tuple(sorted(set(P))), tuple(sorted(set(Q))))

    @classmethod
    def from_factorization(cls, pair: FactorizationPair) -> 'Border':
        return cls.of(pair.n, pair.P.elements, pair.Q.elements)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "P": list(self.P), "Q": list(self.Q)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Border':
        return cls.of(int(data["n"]), data["P"], data["Q"])

    def __str__(self) -> str:
        return f"({{{','.join(map(str, self.P))}}}, {{{','.join(map(str, self.Q))}}})"


@dataclass(frozen=True)
class TraceEntry:
    """One composition step Y := Y o_r member"""
    member: int
    r: int

    def to_dict(self) -> Dict[str, Any]:
        return {"member": self.member, "r": self.r}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TraceEntry':
        return cls(int(data["member"]), int(data["r"]))


@dataclass(frozen=True)
class NormalizedBorderReport:
    seed: int
    bordering_cbc: Cbc
    trace: Tuple[TraceEntry, ...]
    factorizations: Tuple[FactorizationPair, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "border_report",
            "seed": self.seed,
            "bordering_cbc": self.bordering_cbc.to_dict(),
            "trace": [entry.to_dict() for entry in self.trace],
            "factorizations": [pair.to_dict() for pair in self.factorizations],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'NormalizedBorderReport':
        cbc = BayonetSet.from_dict(data["bordering_cbc"])
        return cls(
            seed=int(data["seed"]),
            bordering_cbc=Cbc(cbc.n, cbc.mask),
            trace=tuple(TraceEntry.from_dict(entry) for entry in data["trace"]),
            factorizations=tuple(FactorizationPair.from_dict(pair) for pair in data["factorizations"]),
        )


@dataclass(frozen=True)
class BordanteCandidate:
    label: str
    pair: FactorizationPair
    is_factorization: bool
    borders_family: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "factorization": self.pair.to_dict(),
            "is_factorization": self.is_factorization,
            "borders_family": self.borders_family,
        }
