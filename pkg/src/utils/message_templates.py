from typing import Iterable, List

from src.models.borders import NormalizedBorderReport
from src.models.cbc import BayonetSet, CbcFamily, IncompatibilityCertificate
from src.models.cyclic import KrasnerFactorization
from src.models.hajos import CounterexampleBundle, FamilyHajosChain, HajosChain
from src.models.transforms import CompletionResult, DivisibilityReport, InclusionReport, PrefixSuffixChain
from src.models.verdicts import Verdict
from src.models.words import AmbiguityWitness


class MessageTemplates:
    """Human readable renderings of verdicts and certificates"""

    @staticmethod
    def verdict_line(operation: str, verdict: Verdict) -> str:
        line = f"{operation}: {verdict.status.value}"
        if verdict.reason:
            line += f" ({verdict.reason})"
        return line

    @staticmethod
    def words(words: Iterable[str]) -> str:
        return "{" + ", ".join(words) + "}"

    @staticmethod
    def witness(witness: AmbiguityWitness) -> str:
        return (
            f"ambiguous word: {witness.word}\n"
            f"  {' . '.join(witness.left)}\n"
            f"  {' . '.join(witness.right)}"
        )

    @staticmethod
    def bayonet_set(X: BayonetSet) -> str:
        return f"n={X.n} {X}"

    @staticmethod
    def family(family: CbcFamily) -> str:
        lines = [f"{len(family)} member(s), n={family.n}"]
        for index, member in enumerate(family):
            lines.append(f"  [{index}] {member}")
        return "\n".join(lines)

    @staticmethod
    def incompatibility(certificate: IncompatibilityCertificate) -> str:
        text = "0 -> 0 path: " + " -> ".join(str(vertex) for vertex in certificate.path)
        if certificate.witness is not None:
            text += "\n" + MessageTemplates.witness(certificate.witness)
        return text

    @staticmethod
    def border_report(report: NormalizedBorderReport) -> str:
        lines = [
            f"bordering cbc (seed {report.seed}, {len(report.trace)} composition(s)): {report.bordering_cbc}",
        ]
        for pair in report.factorizations:
            lines.append(f"  border {pair}")
        return "\n".join(lines)

    @staticmethod
    def hajos_chain(chain: HajosChain) -> str:
        if not chain.steps:
            return "{b}"
        lines = []
        for step in chain.steps:
            lines.append(f"  H_{step.t} {step.side.value} of {step.base}")
        return "\n".join(lines)

    @staticmethod
    def family_chain(chain: FamilyHajosChain) -> str:
        reading = "shared" if chain.shared else "member-wise"
        steps = ", ".join(f"H_{step.t} {step.side.value}" for step in chain.steps) or "none"
        return f"{reading} reductions: {steps}"

    @staticmethod
    def krasner_list(factorizations: List[KrasnerFactorization]) -> str:
        lines = [f"{len(factorizations)} Krasner factorization(s)"]
        for item in factorizations:
            lines.append(f"  {item.pair}  chain {list(item.chain.factors)}")
        return "\n".join(lines)

    @staticmethod
    def counterexample(bundle: CounterexampleBundle) -> str:
        lines = [
            f"n = {bundle.spec.n}",
            f"L  = {list(bundle.L)}",
            f"R1 = {list(bundle.R1)}",
            f"R2 = {list(bundle.R2)}",
            f"cbc: {bundle.cbc}",
        ]
        for name, passed in bundle.checks.items():
            lines.append(f"  {'ok  ' if passed else 'FAIL'} {name}")
        return "\n".join(lines)

    @staticmethod
    def divisibility(report: DivisibilityReport) -> str:
        lines = [
            f"primes forced on |P|: {list(report.right_forced_primes)}",
            f"primes forced on |Q|: {list(report.left_forced_primes)}",
            f"n is a multiple of {report.n_divisor}",
        ]
        for prime, witness in sorted(report.right_witnesses.items()):
            lines.append(f"  mu_1,{prime}: {witness}")
        for prime, witness in sorted(report.left_witnesses.items()):
            lines.append(f"  mu_{prime},1: {witness}")
        return "\n".join(lines)

    @staticmethod
    def prefix_suffix_chain(chain: PrefixSuffixChain) -> str:
        lines = [f"  {MessageTemplates.words(chain.levels[0].words)}"]
        for direction, level in zip(chain.directions, chain.levels[1:]):
            lines.append(f"  {direction.value} code over {MessageTemplates.words(level.words)}")
        return "\n".join(lines)

    @staticmethod
    def completion(result: CompletionResult) -> str:
        text = f"code: {MessageTemplates.words(result.code.words)}\n"
        text += MessageTemplates.prefix_suffix_chain(result.chain)
        if result.notes:
            text += f"\nnote: {result.notes}"
        return text

    @staticmethod
    def inclusion(report: InclusionReport) -> str:
        lines = [f"n = {report.n}, omega = {report.omega}"]
        for name, status in report.statuses.items():
            lines.append(f"  {name}: {status.value}")
        return "\n".join(lines)

    @staticmethod
    def number_classes(hajos: bool, cbc_hajos: bool) -> str:
        return f"hajos:{str(hajos).lower()} cbc_hajos:{str(cbc_hajos).lower()}"
