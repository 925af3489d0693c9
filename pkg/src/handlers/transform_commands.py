import argparse
import logging

from src.errors import InvalidInputError
from src.handlers.base import CommandContext, input_border, input_family, input_words
from src.models.cbc import BayonetSet, CbcFamily, encode_pairs
from src.models.verdicts import CommandResult, Verdict
from src.transforms.completion import complete_hajos
from src.transforms.inclusion import inclusion_equivalence, split_around
from src.transforms.phi_mu import divisibility_analysis, phi_closure_check
from src.utils.message_templates import MessageTemplates

logger = logging.getLogger(__name__)


class TransformCommandHandler:
    """phi and mu transforms, completion and the inclusion statements"""

    def phi(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        family = input_family(args, context)
        border = input_border(args, context, family.n)
        if not 0 <= args.seed_member < len(family):
            raise InvalidInputError(f"Member {args.seed_member} is not in the family")
        X = family.members[args.seed_member]
        verdict = phi_closure_check(family, border, X, args.d1, args.d2, context.config.stable_closure_cap)
        return CommandResult.from_verdict(verdict, MessageTemplates.verdict_line(f"phi_{args.d1},{args.d2}", verdict))

    def mu_analyze(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        T = input_words(args, context)
        report = divisibility_analysis(T, args.prime_bound)
        return CommandResult.from_verdict(Verdict.yes(report), MessageTemplates.divisibility(report))

    def complete(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        """Complete {a^n} + X, X in a* omega a*, when X mod n is a Hajós cbc"""
        X = input_words(args, context)
        raw = sorted(split_around(word, args.omega) for word in X.words)
        n = args.n or len(raw)
        residues = BayonetSet(n, encode_pairs(n, ((i % n, j % n) for i, j in raw)))
        result = complete_hajos(CbcFamily.of([residues]), ["a", args.omega], {args.omega: raw},
                                depth_bound=context.config.prefix_suffix_depth,
                                split_cap=context.config.prefix_suffix_split_cap)
        return CommandResult.from_verdict(Verdict.yes(result), MessageTemplates.completion(result))

    def inclusion(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        X = input_words(args, context)
        report = inclusion_equivalence(X.words, args.omega, args.n, context.config.max_enumeration_n,
                                       context.config.prefix_suffix_depth,
                                       context.config.prefix_suffix_split_cap)
        verdict = Verdict(report.overall, report)
        return CommandResult.from_verdict(verdict, MessageTemplates.inclusion(report))
