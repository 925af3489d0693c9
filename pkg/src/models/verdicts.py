from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class VerdictStatus(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


EXIT_CODES = {
    VerdictStatus.YES: 0,
    VerdictStatus.NO: 1,
    VerdictStatus.UNKNOWN: 2,
}


def _certificate_dict(certificate: Any) -> Any:
    if certificate is None:
        return None
    if hasattr(certificate, "to_dict"):
        return certificate.to_dict()
    if isinstance(certificate, (list, tuple)):
        return [_certificate_dict(item) for item in certificate]
    if isinstance(certificate, dict):
        return {key: _certificate_dict(value) for key, value in certificate.items()}
    return certificate


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure with its certificate"""
    status: VerdictStatus
    certificate: Any = None
    reason: str = ""

    @classmethod
    def yes(cls, certificate: Any = None, reason: str = "") -> 'Verdict':
        return cls(VerdictStatus.YES, certificate, reason)

    @classmethod
    def no(cls, certificate: Any = None, reason: str = "") -> 'Verdict':
        return cls(VerdictStatus.NO, certificate, reason)

    @classmethod
    def unknown(cls, certificate: Any = None, reason: str = "") -> 'Verdict':
        return cls(VerdictStatus.UNKNOWN, certificate, reason)

    @property
    def holds(self) -> bool:
        return self.status is VerdictStatus.YES

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"verdict": self.status.value}
        if self.reason:
            data["reason"] = self.reason
        certificate = _certificate_dict(self.certificate)
        if certificate is not None:
            data["certificate"] = certificate
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Verdict':
        return cls(VerdictStatus(data["verdict"]), data.get("certificate"), data.get("reason", ""))


@dataclass
class CommandResult:
    """What a CLI command reports: verdict, certificate and timing"""
    verdict: str
    exit_code: int
    certificate: Optional[Dict[str, Any]] = None
    text: str = ""
    timing_ms: float = 0.0

    @classmethod
    def from_verdict(cls, verdict: Verdict, text: str = "",
                     certificate: Optional[Dict[str, Any]] = None) -> 'CommandResult':
        document = certificate if certificate is not None else verdict.to_dict()
        return cls(verdict=verdict.status.value, exit_code=verdict.exit_code,
                   certificate=document, text=text)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "exit_code": self.exit_code,
            "certificate": self.certificate,
            "timing_ms": round(self.timing_ms, 3),
        }
