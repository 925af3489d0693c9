from typing import Any, Dict, Optional


class ToolkitError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code = 4

    def __init__(self, message: str, certificate: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.certificate = certificate

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        if self.certificate is not None:
            data["certificate"] = self.certificate
        return data


class InvalidInputError(ToolkitError, ValueError):
    """Malformed words, pairs, sets or files"""

    exit_code = 3


class PreconditionError(InvalidInputError):
    """A mathematical precondition of an operation does not hold"""


class UnsupportedInstanceError(InvalidInputError):
    """The instance lies outside the range the theory covers"""


class EnvelopeExceededError(ToolkitError):
    """A configured search bound was reached before a verdict"""

    exit_code = 2

    def __init__(self, message: str, limit: Optional[int] = None, reached: Optional[int] = None):
        super().__init__(message)
        self.limit = limit
        self.reached = reached


class ConsistencyError(ToolkitError):
    """Two decision paths disagree or an internal soundness check failed"""

    exit_code = 4
