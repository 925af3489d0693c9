import json
import os
import re
import tempfile
import logging
from threading import Lock
from typing import Any, Dict, List, Optional, Tuple

from src.errors import InvalidInputError
from src.models.borders import Border
from src.models.cbc import BayonetSet, CbcFamily
from src.models.cyclic import FactorizationPair
from src.models.words import FiniteCode, parse_bayonet

logger = logging.getLogger(__name__)

TOKEN_SEPARATORS = re.compile(r"[\s,;{}\[\]]+")
HEADER_PATTERN = re.compile(r"^\s*([A-Za-z]+)\s*[=:]\s*(.*)$")


def _strip_comments(text: str) -> List[str]:
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_words_text(text: str) -> List[str]:
    """Words separated by blanks, commas or braces; '#' starts a comment"""
    words = []
    for line in _strip_comments(text):
        words.extend(token for token in TOKEN_SEPARATORS.split(line) if token)
    return words


def parse_ints(text: str) -> List[int]:
    try:
        return [int(token) for token in TOKEN_SEPARATORS.split(text) if token]
    except ValueError:
        raise InvalidInputError(f"Expected integers, got {text!r}")


def _headers(lines: List[str]) -> Tuple[Dict[str, str], List[str]]:
    """Split 'key = value' lines from the others"""
    headers, rest = {}, []
    for line in lines:
        match = HEADER_PATTERN.match(line)
        if match and match.group(1) in ("n", "P", "Q"):
            headers[match.group(1)] = match.group(2)
        else:
            rest.append(line)
    return headers, rest


def bayonet_pairs(words: List[str]) -> List[Tuple[int, int]]:
    """Exponent pairs; the central letter is whichever non-a letter the words use"""
    letters = {letter for word in words for letter in word if letter != "a"}
    letter = letters.pop() if len(letters) == 1 else "b"
    return [parse_bayonet(word, letter) for word in words]


def _bayonet_from_words(words: List[str], n: Optional[int]) -> BayonetSet:
    if not words:
        raise InvalidInputError("A bayonet set needs at least one word")
    size = n if n is not None else len(words)
    return BayonetSet.from_pairs(size, bayonet_pairs(words))


class FormatManager:
    """Reads the toolkit's input formats and writes JSON documents atomically"""

    def __init__(self):
        self.lock = Lock()

    def _read_text(self, path: str) -> str:
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise InvalidInputError(f"Cannot read {path}: {e}")

    def _read_json_or_text(self, path: str) -> Tuple[Optional[Any], str]:
        """Parsed JSON when the file holds a JSON document, else (None, text)"""
        text = self._read_text(path)
        stripped = text.lstrip()
        if path.endswith(".json") or stripped.startswith(("{", "[")):
            try:
                return json.loads(text), text
            except json.JSONDecodeError as e:
                if path.endswith(".json"):
                    raise InvalidInputError(f"Invalid JSON in {path}: {e}")
        return None, text

    def read_words(self, path: str) -> FiniteCode:
        """Word list: text (blank or comma separated) or JSON list / {"words": [...]}"""
        data, text = self._read_json_or_text(path)
        if data is None:
            words = parse_words_text(text)
        elif isinstance(data, list):
            words = data
        elif isinstance(data, dict) and "words" in data:
            words = data["words"]
        else:
            raise InvalidInputError(f"{path} holds no word list")
        if not words:
            raise InvalidInputError(f"{path} holds no words")
        return FiniteCode.from_words(words)

    def read_bayonet_set(self, path: str, n: Optional[int] = None) -> BayonetSet:
        """
        A set of words a^i b a^j

        JSON {"n": 4, "pairs": [[0, 0], ...]} or {"words": [...]}; text lists
        the words with an optional 'n = 4' line. Without n the size of the set
        is used, which is right for a cbc.
        """
        data, text = self._read_json_or_text(path)
        if data is None:
            headers, rest = _headers(_strip_comments(text))
            if "n" in headers:
                n = int(headers["n"])
            return _bayonet_from_words(parse_words_text("\n".join(rest)), n)
        if isinstance(data, dict) and "pairs" in data:
            return BayonetSet.from_dict(data)
        if isinstance(data, dict) and "words" in data:
            return _bayonet_from_words(list(data["words"]), data.get("n", n))
        if isinstance(data, list):
            return _bayonet_from_words(list(data), n)
        raise InvalidInputError(f"{path} holds no bayonet set")

    def read_family(self, path: str) -> CbcFamily:
        """JSON list of {"n", "pairs"} (or {"family": [...]}); text has one member per line"""
        data, text = self._read_json_or_text(path)
        if data is None:
            headers, rest = _headers(_strip_comments(text))
            members = [parse_words_text(line) for line in rest]
            n = int(headers["n"]) if "n" in headers else None
            return CbcFamily.of(_bayonet_from_words(words, n) for words in members if words)
        if isinstance(data, dict) and "family" in data:
            data = data["family"]
        if not isinstance(data, list):
            raise InvalidInputError(f"{path} holds no family")
        members = []
        for item in data:
            if isinstance(item, dict) and "pairs" in item:
                members.append(BayonetSet.from_dict(item))
            elif isinstance(item, list):
                members.append(_bayonet_from_words(item, None))
            else:
                raise InvalidInputError(f"Unrecognized family member {item!r}")
        return CbcFamily.of(members)

    def _pair_fields(self, path: str) -> Tuple[Optional[int], List[int], List[int]]:
        data, text = self._read_json_or_text(path)
        if isinstance(data, dict):
            if "factorization" in data:
                data = data["factorization"]
            if "P" not in data or "Q" not in data:
                raise InvalidInputError(f"{path} needs P and Q")
            n = data.get("n")
            return (int(n) if n is not None else None), list(data["P"]), list(data["Q"])
        if data is not None:
            raise InvalidInputError(f"{path} holds no pair of sets")
        headers, rest = _headers(_strip_comments(text))
        if "P" in headers and "Q" in headers:
            n = int(headers["n"]) if "n" in headers else None
            return n, parse_ints(headers["P"]), parse_ints(headers["Q"])
        if len(rest) != 1 or "|" not in rest[0]:
            raise InvalidInputError(f"{path}: expected 'n: P | Q' or P = ... and Q = ... lines")
        line = rest[0]
        n = None
        if ":" in line:
            prefix, line = line.split(":", 1)
            n = int(prefix)
        left, right = line.split("|", 1)
        return n, parse_ints(left), parse_ints(right)

    def read_factorization(self, path: str, n: Optional[int] = None) -> FactorizationPair:
        size, P, Q = self._pair_fields(path)
        size = size if size is not None else n
        if size is None:
            size = len(P) * len(Q)
        return FactorizationPair.of(size, P, Q)

    def read_border(self, path: str, n: int) -> Border:
        size, P, Q = self._pair_fields(path)
        return Border.of(size if size is not None else n, P, Q)

    def read_certificate(self, path: str) -> Dict[str, Any]:
        data, _ = self._read_json_or_text(path)
        if not isinstance(data, dict):
            raise InvalidInputError(f"{path} holds no JSON certificate")
        return data

    def write_json(self, path: str, document: Any):
        """Write through a temporary file in the target directory, then rename"""
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with self.lock:
            fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, 'w', encoding='utf-8') as f:
                    json.dump(document, f, indent=2, sort_keys=True)
                    f.write("\n")
                os.replace(temp_path, path)
            except BaseException:
                if os.path.exists(temp_path):
                    os.remove(temp_path)
                raise
        logger.debug(f"Wrote {path}")
