import argparse
import logging

from src.borders.checks import border_check_family
from src.borders.discovery import find_border
from src.cyclic.factorizations import is_factorization, is_hajos_factorization
from src.cyclic.krasner import enumerate_krasner, is_krasner
from src.errors import InvalidInputError
from src.handlers.base import CommandContext, input_border, input_factorization, input_family
from src.models.verdicts import CommandResult, Verdict
from src.utils.message_templates import MessageTemplates

logger = logging.getLogger(__name__)


class BorderCommandHandler:
    """Borders of families and factorizations of Z_n"""

    def find(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        report = find_border(family, args.seed_member)
        return CommandResult.from_verdict(Verdict.yes(report), MessageTemplates.border_report(report))

    def check(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        border = input_border(args, context, family.n)
        if border.n != family.n:
            raise InvalidInputError(f"Border modulus {border.n} differs from the family's {family.n}")
        holds = border_check_family(border.P, border.Q, family)
        verdict = Verdict.yes(border) if holds else Verdict.no(border, reason="some cell is missed or covered twice")
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"border {border}", verdict))

    def krasner_enum(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        factorizations = enumerate_krasner(args.n, context.config.krasner_max_n)
        verdict = Verdict.yes({"n": args.n, "factorizations": [item.to_dict() for item in factorizations]})
        return CommandResult.from_verdict(verdict, MessageTemplates.krasner_list(factorizations))

    def krasner_check(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        pair = input_factorization(args, context)
        if not is_factorization(pair.P, pair.Q, pair.n):
            verdict = Verdict.no(pair, reason="not a factorization")
        elif is_krasner(pair.P, pair.Q):
            verdict = Verdict.yes(pair)
        else:
            verdict = Verdict.no(pair, reason="some k < n is not an integer sum p + q")
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"Krasner {pair}", verdict))

    def factorization_hajos(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        pair = input_factorization(args, context)
        verdict = is_hajos_factorization(pair)
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"Hajós {pair}", verdict))
