import argparse
import logging
from typing import Any, Callable, Dict, Optional, Tuple

from src.borders.checks import border_check_family
from src.borders.discovery import check_border_report
from src.cbc.core import is_cbc
from src.cyclic.factorizations import is_factorization, periods
from src.errors import InvalidInputError
from src.handlers.base import CommandContext, input_family, input_words
from src.hajos.counterexample import non_hajos_sets
from src.hajos.expansion import replay_hajos_chain
from src.models.borders import Border, NormalizedBorderReport
from src.models.cbc import BayonetSet
from src.models.cyclic import FactorizationPair, ResidueSet
from src.models.hajos import HajosChain, NonHajosSpec
from src.models.transforms import PrefixSuffixChain
from src.models.verdicts import CommandResult, Verdict
from src.models.words import AmbiguityWitness, FiniteCode
from src.storage.format_manager import bayonet_pairs
from src.transforms.prefix_suffix import validate_chain

logger = logging.getLogger(__name__)

Check = Tuple[bool, str]


def certificate_kind(document: Dict[str, Any], has_input: bool) -> str:
    """The "kind" field, else a guess from the fields present"""
    if "kind" in document:
        return document["kind"]
    if "left" in document and "right" in document:
        return "ambiguity"
    if "P" in document and "Q" in document:
        return "border" if has_input else "factorization"
    raise InvalidInputError("Cannot tell what kind of certificate this is; pass --kind")


class VerifyHandler:
    """Re-runs the pure checkers on an emitted certificate, never a search"""

    def __init__(self):
        self.checkers: Dict[str, Callable[[Dict[str, Any], argparse.Namespace, CommandContext], Check]] = {
            "ambiguity": self._ambiguity,
            "incompatibility": self._incompatibility,
            "factorization": self._factorization,
            "border": self._border,
            "border_report": self._border_report,
            "hajos_chain": self._hajos_chain,
            "prefix_suffix_chain": self._prefix_suffix_chain,
            "completion": self._completion,
            "counterexample": self._counterexample,
        }

    def verify(self, args: argparse.Namespace, context: CommandContext) -> CommandResult:
        if not args.certificate:
            raise InvalidInputError("verify needs --certificate")
        document = context.formats.read_certificate(args.certificate)
        # command output wraps the certificate of its verdict
        while "verdict" in document and isinstance(document.get("certificate"), dict):
            document = document["certificate"]
        kind = args.kind or certificate_kind(document, bool(args.input or args.words))
        checker = self.checkers.get(kind)
        if checker is None:
            raise InvalidInputError(f"No checker for certificates of kind {kind!r}")
        passed, detail = checker(document, args, context)
        logger.info(f"Verified {kind}: {passed}")
        result = {"kind": kind, "verified": passed, "detail": detail}
        verdict = Verdict.yes(result) if passed else Verdict.no(result, reason=detail)
        return CommandResult.from_verdict(verdict, f"{kind}: {'verified' if passed else 'REJECTED'} ({detail})")

    def _optional_code(self, args: argparse.Namespace, context: CommandContext) -> Optional[FiniteCode]:
        if args.input or args.words:
            return input_words(args, context)
        return None

    def _ambiguity(self, document, args, context) -> Check:
        witness = AmbiguityWitness.from_dict(document)
        code = self._optional_code(args, context)
        words = code.words if code is not None else document.get("code", witness.left + witness.right)
        return witness.verify(words), f"word {witness.word}"

    def _incompatibility(self, document, args, context) -> Check:
        if not document.get("witness"):
            return False, "no word-level witness"
        witness = AmbiguityWitness.from_dict(document["witness"])
        return witness.verify(document["code"]), f"path {document['path']}"

    def _factorization(self, document, args, context) -> Check:
        pair = FactorizationPair.from_dict(document)
        return is_factorization(pair.P, pair.Q, pair.n), str(pair)

    def _border(self, document, args, context) -> Check:
        border = Border.from_dict(document)
        family = input_family(args, context, name="words")
        return border_check_family(border.P, border.Q, family), str(border)

    def _border_report(self, document, args, context) -> Check:
        report = NormalizedBorderReport.from_dict(document)
        family = input_family(args, context, name="words")
        return check_border_report(family, report), f"{len(report.trace)} compositions replayed"

    def _hajos_chain(self, document, args, context) -> Check:
        chain = HajosChain.from_dict(document)
        rebuilt = replay_hajos_chain(chain)
        if args.input or args.words:
            code = input_words(args, context)
            target = BayonetSet.from_pairs(rebuilt.n, bayonet_pairs(list(code.words)))
            return target == rebuilt, f"replayed to {rebuilt}"
        return True, f"replayed to {rebuilt}"

    def _prefix_suffix_chain(self, document, args, context) -> Check:
        chain = PrefixSuffixChain.from_dict(document)
        return validate_chain(chain), f"{chain.depth} step(s)"

    def _completion(self, document, args, context) -> Check:
        chain = PrefixSuffixChain.from_dict(document["chain"])
        code = FiniteCode.from_words(document["code"])
        return chain.levels[0] == code and validate_chain(chain), f"{len(code)} words"

    def _counterexample(self, document, args, context) -> Check:
        spec = NonHajosSpec.from_dict(document["spec"])
        n = spec.n
        L, R1, R2 = non_hajos_sets(spec)
        if [list(L), list(R1), list(R2)] != [document["L"], document["R1"], document["R2"]]:
            return False, "L, R1, R2 do not match the parameters"
        Y = BayonetSet.from_dict(document["cbc"])
        rows = {}
        for i, j in Y.pairs:
            rows.setdefault(i, set()).add(j)
        if set(rows) != set(L) or any(sorted(right) not in (R1, R2) for right in rows.values()):
            return False, "the cbc is not assembled from L, R1 and R2"
        R1_set, R2_set = ResidueSet.of(n, R1), ResidueSet.of(n, R2)
        checks = [
            is_factorization(L, R1, n),
            is_factorization(L, R2, n),
            not set(periods(R1_set).elements[1:]) & set(periods(R2_set).elements[1:]),
            periods(ResidueSet.of(n, L)).elements == (0,),
            is_cbc(n, Y).holds,
        ]
        return all(checks), f"n={n}"
