import argparse
import logging

from src.cbc.omega import c_of_omega, maximality_sweep
from src.handlers.base import CommandContext, input_words
from src.models.verdicts import CommandResult, Verdict
from src.transforms.prefix_suffix import is_prefix_suffix
from src.utils.message_templates import MessageTemplates
from src.words.codes import is_code

logger = logging.getLogger(__name__)


class WordCommandHandler:
    """Commands on plain finite sets of words"""

    def check_code(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Unique decipherability, with an ambiguous word when it fails"""
        code = input_words(args, context)
        verdict = is_code(code)
        text = MessageTemplates.verdict_line(f"code {MessageTemplates.words(code.words)}", verdict)
        if not verdict.holds:
            text += "\n" + MessageTemplates.witness(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def prefix_suffix(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        code = input_words(args, context)
        verdict = is_prefix_suffix(code, context.config.prefix_suffix_depth,
                                   context.config.prefix_suffix_split_cap)
        text = MessageTemplates.verdict_line("prefix-suffix", verdict)
        if verdict.holds:
            text += "\n" + MessageTemplates.prefix_suffix_chain(verdict.certificate)
        return CommandResult.from_verdict(verdict, text)

    def sweep(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Bounded maximality sweep; a clean sweep is only Unknown"""
        code = input_words(args, context)
        length = args.length or context.config.omega_sweep_length
        verdict = maximality_sweep(code, args.n, length)
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line("maximality sweep", verdict))

    def omega(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        code = input_words(args, context)
        pairs = c_of_omega(code, args.n, args.omega)
        verdict = Verdict.yes(pairs)
        return CommandResult.from_verdict(verdict, f"C({args.omega}) = {MessageTemplates.bayonet_set(pairs)}")
