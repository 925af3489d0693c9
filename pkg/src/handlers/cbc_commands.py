import argparse
import logging

from src.cbc.closure import stable_closure
from src.cbc.compatibility import is_compatible
from src.cbc.core import compose, is_cbc, triangle_property
from src.cbc.enumeration import count_cbc, joint_embeddability
from src.errors import InvalidInputError
from src.handlers.base import CommandContext, input_bayonet, input_family
from src.models.cbc import BayonetSet
from src.models.verdicts import CommandResult, Verdict
from src.models.words import FiniteCode
from src.storage.format_manager import bayonet_pairs, parse_words_text
from src.utils.message_templates import MessageTemplates

logger = logging.getLogger(__name__)


def _operand(text: str, n: int) -> BayonetSet:
    code = FiniteCode.from_words(parse_words_text(text))
    return BayonetSet.from_pairs(n, bayonet_pairs(list(code.words)))


class CbcCommandHandler:
    """Commands on complete bayonet codes and their families"""

    def check_cbc(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        X = input_bayonet(args, context)
        verdict = is_cbc(X.n, X)
        text = MessageTemplates.verdict_line(f"{X.n}-cbc {X}", verdict)
        if not verdict.holds and verdict.certificate is not None:
            text += "\n" + MessageTemplates.incompatibility(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def compose(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """X o_r Y; Yes when the result is again an n-cbc"""
        left = parse_words_text(args.left)
        n = args.n or len(left)
        X, Y = _operand(args.left, n), _operand(args.right, n)
        result = compose(X, Y, args.r)
        cbc = is_cbc(n, result)
        verdict = Verdict(cbc.status, result, cbc.reason)
        return CommandResult.from_verdict(verdict, f"{X} o_{args.r} {Y} = {result}")

    def compatible(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        verdict = is_compatible(family)
        text = MessageTemplates.verdict_line("compatible", verdict)
        if not verdict.holds:
            text += "\n" + MessageTemplates.incompatibility(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def stable(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        closure = stable_closure(family, context.config.stable_closure_cap)
        return CommandResult.from_verdict(Verdict.yes({"kind": "stable_closure", "family": closure.to_dict()}),
                                          MessageTemplates.family(closure))

    def triangle(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        X = input_bayonet(args, context)
        verdict = triangle_property(X)
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"triangle {X}", verdict))

    def embed(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Is there a compatible family with one member above each required set"""
        if not args.n:
            raise InvalidInputError("embed needs --n")
        required = [bayonet_pairs(parse_words_text(member)) for member in args.members]
        if not required:
            raise InvalidInputError("embed needs at least one required set")
        verdict = joint_embeddability(required, args.n, context.config.max_enumeration_n)
        text = MessageTemplates.verdict_line("jointly embeddable", verdict)
        if verdict.holds:
            text += "\n" + "\n".join(f"  {member}" for member in verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def count(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        total = count_cbc(args.n, context.config.max_enumeration_n)
        return CommandResult.from_verdict(Verdict.yes({"n": args.n, "count": total}),
                                          f"{total} {args.n}-cbc")
