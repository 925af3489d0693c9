import argparse
import logging

from src.cyclic.numbers import is_cbc_hajos_number, is_hajos_number
from src.errors import InvalidInputError
from src.handlers.base import CommandContext, input_bayonet, input_family, int_list
from src.hajos.counterexample import build_non_hajos_cbc
from src.hajos.recognition import is_hajos_cbc, is_hajos_family, krasner_border_equivalence, periodicity_criterion
from src.models.hajos import NonHajosSpec
from src.models.verdicts import CommandResult, Verdict
from src.utils.message_templates import MessageTemplates

logger = logging.getLogger(__name__)


class HajosCommandHandler:
    """Hajós recognition, number classes and the non-Hajós construction"""

    def cbc(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        Y = input_bayonet(args, context)
        verdict = is_hajos_cbc(Y)
        text = MessageTemplates.verdict_line(f"Hajós {Y}", verdict)
        if verdict.holds:
            text += "\n" + MessageTemplates.hajos_chain(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def family(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Periodic reductions, or with --krasner both characterizations side by side"""
        family = input_family(args, context)
        if args.krasner:
            verdict = krasner_border_equivalence(family, context.config.stable_closure_cap,
                                                 context.config.krasner_max_n)
            return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line("Hajós / Krasner border", verdict))
        verdict = is_hajos_family(family, shared=not args.memberwise)
        text = MessageTemplates.verdict_line("Hajós family", verdict)
        if verdict.holds:
            text += "\n" + MessageTemplates.family_chain(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def number(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Exit code follows the cbc Hajós class"""
        if args.value < 1:
            raise InvalidInputError(f"n must be >= 1, got {args.value}")
        hajos = is_hajos_number(args.value)
        cbc_hajos = is_cbc_hajos_number(args.value)
        document = {"n": args.value, "hajos": hajos, "cbc_hajos": cbc_hajos}
        verdict = Verdict.yes(document) if cbc_hajos else Verdict.no(document)
        return CommandResult.from_verdict(verdict, MessageTemplates.number_classes(hajos, cbc_hajos))

    def periodic(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        Q = int_list(args.Q, "Q") if args.Q is not None else None
        periodic = periodicity_criterion(family, int_list(args.P, "P"), args.m, Q,
                                         check_border=Q is not None,
                                         closure_cap=context.config.stable_closure_cap)
        document = {"m": args.m, "periodic": periodic}
        verdict = Verdict.yes(document) if periodic else Verdict.no(document)
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"{args.m}-periodic right sets", verdict))

    def counterexample(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        spec = NonHajosSpec(args.p1, args.p2, args.q1, args.q2)
        bundle = build_non_hajos_cbc(spec, context.config.krasner_max_n)
        verdict = Verdict.yes(bundle) if bundle.all_passed else Verdict.no(
            bundle, reason=f"failed checks: {', '.join(bundle.failed_checks())}")
        return CommandResult.from_verdict(verdict, MessageTemplates.counterexample(bundle))
