import argparse
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

from src.config import ToolkitConfig
from src.errors import InvalidInputError
from src.models.borders import Border
from src.models.cbc import BayonetSet, CbcFamily
from src.models.cyclic import FactorizationPair
from src.models.words import FiniteCode
from src.storage.format_manager import FormatManager, bayonet_pairs, parse_ints, parse_words_text

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    """Shared objects every handler receives"""
    config: ToolkitConfig
    formats: FormatManager


def input_words(args: argparse.Namespace, context: CommandContext, name: str = "words") -> FiniteCode:
    """Words given on the command line, or read from --input"""
    words: Sequence[str] = getattr(args, name, None) or []
    if words:
        return FiniteCode.from_words(parse_words_text(" ".join(words)))
    if args.input:
        return context.formats.read_words(args.input)
    raise InvalidInputError("Give the words on the command line or with --input")


def input_bayonet(args: argparse.Namespace, context: CommandContext, n: Optional[int] = None,
                  name: str = "words") -> BayonetSet:
    words: Sequence[str] = getattr(args, name, None) or []
    size = n if n is not None else getattr(args, "n", None)
    if words:
        code = FiniteCode.from_words(parse_words_text(" ".join(words)))
        return BayonetSet.from_pairs(size if size is not None else len(code),
                                     bayonet_pairs(list(code.words)))
    if args.input:
        return context.formats.read_bayonet_set(args.input, size)
    raise InvalidInputError("Give the bayonet words on the command line or with --input")


def input_family(args: argparse.Namespace, context: CommandContext, name: str = "members") -> CbcFamily:
    """Members as comma separated word lists on the command line, or a family file"""
    members: Sequence[str] = getattr(args, name, None) or []
    if members:
        sets: List[BayonetSet] = []
        for member in members:
            code = FiniteCode.from_words(parse_words_text(member))
            size = args.n if getattr(args, "n", None) else len(code)
            sets.append(BayonetSet.from_pairs(size, bayonet_pairs(list(code.words))))
        return CbcFamily.of(sets)
    if args.input:
        return context.formats.read_family(args.input)
    raise InvalidInputError("Give the family members on the command line or with --input")


def int_list(text: Optional[str], name: str) -> List[int]:
    if text is None:
        raise InvalidInputError(f"--{name} is required")
    return parse_ints(text)


def input_border(args: argparse.Namespace, context: CommandContext, n: int) -> Border:
    if getattr(args, "P", None) is not None or getattr(args, "Q", None) is not None:
        return Border.of(n, int_list(args.P, "P"), int_list(args.Q, "Q"))
    path = getattr(args, "border", None)
    if path:
        return context.formats.read_border(path, n)
    raise InvalidInputError("Give the border with --P and --Q or with --border")


def input_factorization(args: argparse.Namespace, context: CommandContext) -> FactorizationPair:
    if getattr(args, "P", None) is not None or getattr(args, "Q", None) is not None:
        P, Q = int_list(args.P, "P"), int_list(args.Q, "Q")
        n = args.n if getattr(args, "n", None) else len(P) * len(Q)
        return FactorizationPair.of(n, P, Q)
    if args.input:
        return context.formats.read_factorization(args.input, getattr(args, "n", None))
    raise InvalidInputError("Give the factorization with --P and --Q or with --input")
