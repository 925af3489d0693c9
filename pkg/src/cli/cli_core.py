import argparse
import json
import logging
import sys
import time
from typing import Callable, Dict, List, Optional, TextIO

from src.config import ConfigManager
from src.errors import EnvelopeExceededError, InvalidInputError, ToolkitError
from src.handlers.base import CommandContext
from src.handlers.border_commands import BorderCommandHandler
from src.handlers.cbc_commands import CbcCommandHandler
from src.handlers.hajos_commands import HajosCommandHandler
from src.handlers.transform_commands import TransformCommandHandler
from src.handlers.verify_handler import VerifyHandler
from src.handlers.word_commands import WordCommandHandler
from src.models.verdicts import CommandResult
from src.storage.format_manager import FormatManager
from src.utils.logger import ToolkitLogger, setup_logging

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

Command = Callable[[argparse.Namespace, CommandContext], CommandResult]


class ToolkitArgumentParser(argparse.ArgumentParser):
    """Usage errors become InvalidInputError instead of exiting"""

    def error(self, message: str):
        raise InvalidInputError(f"{message}\n{self.format_usage().strip()}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="input file (words, cbc, family or factorization)")
    common.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    common.add_argument("--json", action="store_true", help="same as --format json")
    common.add_argument("--output", help="also write the JSON document to this path")
    common.add_argument("--max-n", type=int, help="largest n for exhaustive enumeration")
    common.add_argument("--depth-bound", type=int, help="prefix-suffix chain length searched first")
    common.add_argument("--closure-cap", type=int, help="largest stable closure built")
    common.add_argument("--seed-member", type=int, default=0, help="family member to start from")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    return common


class BayonetToolkitCli:
    """Builds the parser, dispatches subcommands and reports results"""

    def __init__(self, config_manager: Optional[ConfigManager] = None,
                 formats: Optional[FormatManager] = None):
        self.config_manager = config_manager or ConfigManager()
        self.formats = formats or FormatManager()
        self.commands: Dict[str, Command] = {}
        self.parser = self._build_parser()

    def _register(self, subparsers, name: str, command: Command, help_text: str,
                  parents: List[argparse.ArgumentParser]) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(name, help=help_text, parents=parents)
        key = f"{subparsers.dest}:{name}"
        parser.set_defaults(command_key=key)
        self.commands[key] = command
        return parser

    def _build_parser(self) -> ToolkitArgumentParser:
        words = WordCommandHandler()
        cbc = CbcCommandHandler()
        borders = BorderCommandHandler()
        hajos = HajosCommandHandler()
        transforms = TransformCommandHandler()
        verify = VerifyHandler()

        common = [_common_options()]
        parser = ToolkitArgumentParser(prog="bayonet", description="Complete bayonet code toolkit")
        sub = parser.add_subparsers(dest="command", parser_class=ToolkitArgumentParser)
        sub.required = True

        p = self._register(sub, "check-code", words.check_code, "decide unique decipherability", common)
        p.add_argument("words", nargs="*")
        p = self._register(sub, "prefix-suffix", words.prefix_suffix, "search a prefix-suffix chain", common)
        p.add_argument("words", nargs="*")
        p = self._register(sub, "sweep", words.sweep, "bounded maximality sweep", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--length", type=int)
        p = self._register(sub, "omega", words.omega, "residue pairs C_M(omega)", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--omega", required=True)

        p = self._register(sub, "check-cbc", cbc.check_cbc, "is the set an n-cbc", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--n", type=int)
        p = self._register(sub, "compose", cbc.compose, "X o_r Y", common)
        p.add_argument("--left", required=True, help="words of X, comma separated")
        p.add_argument("--right", required=True, help="words of Y, comma separated")
        p.add_argument("--r", type=int, default=0)
        p.add_argument("--n", type=int)
        for name, command, help_text in (("compatible", cbc.compatible, "compatibility of a family"),
                                         ("stable", cbc.stable, "stable closure of a family")):
            p = self._register(sub, name, command, help_text, common)
            p.add_argument("members", nargs="*", help="one comma separated word list per member")
            p.add_argument("--n", type=int)
        p = self._register(sub, "triangle", cbc.triangle, "triangle property", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--n", type=int)
        p = self._register(sub, "embed", cbc.embed, "joint embeddability into compatible cbc", common)
        p.add_argument("members", nargs="+", help="one comma separated word list per required set")
        p.add_argument("--n", type=int, required=True)
        p = self._register(sub, "count", cbc.count, "number of n-cbc", common)
        p.add_argument("--n", type=int, required=True)

        border = sub.add_parser("border", help="borders of families")
        border_sub = border.add_subparsers(dest="border", parser_class=ToolkitArgumentParser)
        border_sub.required = True
        for name, command in (("find", borders.find), ("check", borders.check)):
            p = self._register(border_sub, name, command, f"{name} a border", common)
            p.add_argument("members", nargs="*")
            p.add_argument("--n", type=int)
            if name == "check":
                p.add_argument("--P")
                p.add_argument("--Q")
                p.add_argument("--border", help="border file")

        krasner = sub.add_parser("krasner", help="Krasner factorizations")
        krasner_sub = krasner.add_subparsers(dest="krasner", parser_class=ToolkitArgumentParser)
        krasner_sub.required = True
        p = self._register(krasner_sub, "enum", borders.krasner_enum, "every Krasner factorization of Z_n", common)
        p.add_argument("--n", type=int, required=True)
        p = self._register(krasner_sub, "check", borders.krasner_check, "is (P, Q) Krasner", common)
        p.add_argument("--P")
        p.add_argument("--Q")
        p.add_argument("--n", type=int)
        p = self._register(sub, "factorization", borders.factorization_hajos,
                           "is a factorization of Hajós", common)
        p.add_argument("--P")
        p.add_argument("--Q")
        p.add_argument("--n", type=int)

        hajos_parser = sub.add_parser("hajos", help="Hajós recognition")
        hajos_sub = hajos_parser.add_subparsers(dest="hajos", parser_class=ToolkitArgumentParser)
        hajos_sub.required = True
        p = self._register(hajos_sub, "cbc", hajos.cbc, "is a cbc of Hajós", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--n", type=int)
        p = self._register(hajos_sub, "family", hajos.family, "is a family of Hajós", common)
        p.add_argument("members", nargs="*")
        p.add_argument("--n", type=int)
        p.add_argument("--memberwise", action="store_true", help="reduce members independently")
        p.add_argument("--krasner", action="store_true", help="also decide through Krasner borders")
        p = self._register(hajos_sub, "number", hajos.number, "number classes of n", common)
        p.add_argument("value", type=int)
        p = self._register(hajos_sub, "periodic", hajos.periodic, "periodicity of the right sets", common)
        p.add_argument("members", nargs="*")
        p.add_argument("--n", type=int)
        p.add_argument("--P", required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--Q")

        p = self._register(sub, "counterexample", hajos.counterexample, "build the non-Hajós cbc", common)
        for name in ("--p1", "--p2", "--q1", "--q2"):
            p.add_argument(name, type=int, required=True)

        p = self._register(sub, "phi", transforms.phi, "phi_{d1,d2} closure check", common)
        p.add_argument("members", nargs="*")
        p.add_argument("--n", type=int)
        p.add_argument("--P")
        p.add_argument("--Q")
        p.add_argument("--border", help="border file")
        p.add_argument("--d1", type=int, required=True)
        p.add_argument("--d2", type=int, required=True)
        p = self._register(sub, "mu-analyze", transforms.mu_analyze, "primes forced by mu", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--prime-bound", type=int, default=7)
        p = self._register(sub, "complete", transforms.complete, "complete to a prefix-suffix code", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--omega", default="b")
        p.add_argument("--n", type=int)
        p = self._register(sub, "inclusion", transforms.inclusion, "inclusion in a finite maximal code", common)
        p.add_argument("words", nargs="*")
        p.add_argument("--omega", default="b")
        p.add_argument("--n", type=int, required=True)

        p = self._register(sub, "verify", verify.verify, "re-check an emitted certificate", common)
        p.add_argument("words", nargs="*", help="words or family members the certificate refers to")
        p.add_argument("--certificate")
        p.add_argument("--kind")
        return parser

    def run(self, argv: List[str]) -> CommandResult:
        """Parse, dispatch and time one command; errors become results with their exit code"""
        started = time.perf_counter()
        try:
            args = self.parser.parse_args(argv)
            config = self.config_manager.get_toolkit_config(
                max_enumeration_n=args.max_n,
                prefix_suffix_depth=args.depth_bound,
                stable_closure_cap=args.closure_cap,
            )
            if args.log_level:
                setup_logging(args.log_level, config.log_file)
            command = self.commands[args.command_key]
            logger.debug(f"Running {args.command_key}")
            result = command(args, CommandContext(config, self.formats))
            if args.output:
                self.formats.write_json(args.output, result.to_dict())
        except ToolkitError as e:
            toolkit_logger.log_error(e, argv[0] if argv else None)
            verdict = "unknown" if isinstance(e, EnvelopeExceededError) else "error"
            result = CommandResult(verdict=verdict, exit_code=e.exit_code, certificate=e.to_dict(), text=str(e))
        except Exception as e:
            logger.error(f"Fatal error: {e}", exc_info=True)
            result = CommandResult(verdict="error", exit_code=4, certificate={"error": type(e).__name__, "message": str(e)},
                                   text=str(e))
        result.timing_ms = (time.perf_counter() - started) * 1000
        return result

    def main(self, argv: List[str], stdout: TextIO = sys.stdout) -> int:
        result = self.run(argv)
        as_json = "--json" in argv or "--format=json" in argv or _flag_value(argv, "--format") == "json"
        if as_json:
            stdout.write(json.dumps(result.to_dict(), indent=2, sort_keys=True) + "\n")
        elif result.exit_code >= 3:
            sys.stderr.write(f"error: {result.text}\n")
        else:
            stdout.write(result.text + "\n")
        return result.exit_code


def _flag_value(argv: List[str], flag: str) -> Optional[str]:
    if flag in argv:
        index = argv.index(flag)
        if index + 1 < len(argv):
            return argv[index + 1]
    return None
