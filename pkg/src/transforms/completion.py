import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.config import DEFAULT_PREFIX_SUFFIX_DEPTH, DEFAULT_PREFIX_SUFFIX_SPLIT_CAP
from src.errors import ConsistencyError, InvalidInputError, PreconditionError
from src.hajos.expansion import is_right_periodic
from src.hajos.recognition import is_hajos_family
from src.models.cbc import BayonetSet, CbcFamily, Pair, encode_pairs
from src.models.hajos import FamilyHajosChain, FamilyHajosStep, Side
from src.models.transforms import CompletionResult, Direction, PrefixSuffixChain
from src.models.words import FiniteCode
from src.transforms.prefix_suffix import is_prefix_suffix, mirror_chain, validate_chain
from src.utils.logger import ToolkitLogger
from src.words.codes import WordsLike, is_code

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

Params = Mapping[str, Sequence[int]]


def _as_code(c: WordsLike) -> FiniteCode:
    return c if isinstance(c, FiniteCode) else FiniteCode.from_words(c)


def _join(levels: Sequence[FiniteCode], directions: Sequence[Direction]) -> PrefixSuffixChain:
    """Chain from levels, dropping a level equal to the one below it"""
    kept_levels: List[FiniteCode] = [levels[0]]
    kept_directions: List[Direction] = []
    for direction, level in zip(directions, levels[1:]):
        if level == kept_levels[-1]:
            continue
        kept_levels.append(level)
        kept_directions.append(direction)
    return PrefixSuffixChain(tuple(kept_levels), tuple(kept_directions))


def _params_for(words: Iterable[str], params: Optional[Params], t: int, name: str) -> Dict[str, Tuple[int, ...]]:
    words = list(words)
    if params is None:
        return {word: (0,) * t for word in words}
    missing = sorted(set(words) - set(params))
    extra = sorted(set(params) - set(words))
    if missing or extra:
        raise InvalidInputError(f"{name} parameters must cover exactly C minus a^n "
                                f"(missing {missing}, unexpected {extra})")
    result = {}
    for word in words:
        values = tuple(int(value) for value in params[word])
        if len(values) != t or any(value < 0 for value in values):
            raise InvalidInputError(f"{name} parameters of {word!r} must be {t} integers >= 0, got {values}")
        result[word] = values
    return result


def build_prefix_suffix_expansion(C: WordsLike, n: int, t: int, i_params: Optional[Params] = None,
                                  j_params: Optional[Params] = None,
                                  c_chain: Optional[PrefixSuffixChain] = None) -> CompletionResult:
    """
    {a^{nt}} + {a^{n i_s(w)} w a^{n(s + t j_s(w))} : w in C - {a^n}, s in [t]}

    The chain has two new levels: the set without the trailing
    powers a^{nt j} is a suffix code over C, and the result a prefix code
    over it. When no chain of C is given one is searched for; without one
    the chain ends at C.

    Raises:
        PreconditionError: C is not a code or misses a^n
        InvalidInputError: malformed parameters
    """
    code = _as_code(C)
    if n < 1 or t < 1:
        raise InvalidInputError(f"n and t must be >= 1, got n={n}, t={t}")
    power = "a" * n
    if power not in code:
        raise PreconditionError(f"a^{n} must belong to C")
    verdict = is_code(code)
    if not verdict.holds:
        raise PreconditionError("C is not a code", verdict.certificate.to_dict())
    others = [word for word in code.words if word != power]
    shifts = _params_for(others, i_params, t, "i")
    tails = _params_for(others, j_params, t, "j")

    block = "a" * (n * t)
    suffix_level = [block]
    result = [block]
    for word in others:
        for s in range(t):
            body = "a" * (n * shifts[word][s]) + word + "a" * (n * s)
            suffix_level.append(body)
            result.append(body + block * tails[word][s])
    suffix_code = FiniteCode.from_words(suffix_level)
    result_code = FiniteCode.from_words(result)
    if len(result_code) != len(result):
        raise ConsistencyError("The expansion produced repeated words")

    notes = None
    if c_chain is None:
        found = is_prefix_suffix(code)
        if found.holds:
            c_chain = found.certificate
        else:
            c_chain = PrefixSuffixChain((code,), ())
            notes = "no chain of C was found; the chain ends at C"
    if c_chain.levels[0] != code:
        raise InvalidInputError("The chain of C must start at C")
    chain = _join((result_code, suffix_code) + c_chain.levels,
                  (Direction.PREFIX, Direction.SUFFIX) + c_chain.directions)
    if not validate_chain(chain, over=c_chain.levels[-1]):
        raise ConsistencyError("The expansion chain does not re-validate")
    return CompletionResult(result_code, chain, notes)


def _complete(steps: Tuple[FamilyHajosStep, ...], n: int, sets: Dict[str, List[Pair]],
              C: FiniteCode, c_chain: PrefixSuffixChain) -> Tuple[FiniteCode, PrefixSuffixChain]:
    """Recursion over the reduction steps of a Hajós family"""
    if not steps:
        if n != 1 or any(pairs != [(0, 0)] for pairs in sets.values()):
            raise PreconditionError("At size 1 every set must be {b}")
        return C, c_chain
    step = steps[0]
    if step.side is Side.DUAL:
        mirrored = {omega[::-1]: sorted((j, i) for i, j in pairs) for omega, pairs in sets.items()}
        direct = (FamilyHajosStep(step.t, Side.DIRECT),) + steps[1:]
        code, chain = _complete(direct, n, mirrored, C.reversed(), mirror_chain(c_chain))
        return code.reversed(), mirror_chain(chain)

    t = step.t
    if n % t:
        raise PreconditionError(f"Step t={t} does not divide {n}")
    m = n // t
    lower_sets: Dict[str, List[Pair]] = {}
    shifts: Dict[Tuple[str, int, int], List[int]] = {}
    tails: Dict[Tuple[str, int, int], List[int]] = {}
    for omega, pairs in sets.items():
        residues = BayonetSet(n, encode_pairs(n, ((i % n, j % n) for i, j in pairs)))
        if not is_right_periodic(residues, m).holds:
            raise PreconditionError(f"The set completed by {omega!r} is not {m}-right-periodic")
        for I, J in pairs:
            y, z = I % m, J % m
            q = (J - z) // m
            s = q % t
            key = (omega, y, z)
            shifts.setdefault(key, [0] * t)[s] = (I - y) // m
            tails.setdefault(key, [0] * t)[s] = q // t
        lower_sets[omega] = sorted({(i % m, j % m) for i, j in pairs})

    lower_code, lower_chain = _complete(steps[1:], m, lower_sets, C, c_chain)
    i_params = {"a" * y + omega + "a" * z: shifts[(omega, y, z)] for omega, y, z in shifts}
    j_params = {"a" * y + omega + "a" * z: tails[(omega, y, z)] for omega, y, z in tails}
    expansion = build_prefix_suffix_expansion(lower_code, m, t, i_params, j_params, lower_chain)
    return expansion.code, expansion.chain


def complete_hajos(family: CbcFamily, C: WordsLike, sets: Mapping[str, Iterable[Pair]],
                   chain: Optional[FamilyHajosChain] = None,
                   c_chain: Optional[PrefixSuffixChain] = None,
                   depth_bound: int = DEFAULT_PREFIX_SUFFIX_DEPTH,
                   split_cap: int = DEFAULT_PREFIX_SUFFIX_SPLIT_CAP) -> CompletionResult:
    """
    {a^n} + the union of X_w[b <- w] over w in C - {a}, with its chain

    C = {a, w_1, ..., w_k} must be prefix-suffix and each X_w (raw exponent
    pairs) must reduce mod n onto a member of the Hajós family. The chain is
    built step by step along the family's reductions, a dual step working
    on the mirror image.

    Raises:
        PreconditionError: the family is not of Hajós (certificate attached),
            C is not prefix-suffix, or a set does not reduce into the family
    """
    code = _as_code(C)
    n = family.n
    if "a" not in code:
        raise PreconditionError("C must contain the letter a")
    omegas = [word for word in code.words if word != "a"]
    if set(sets) != set(omegas):
        raise InvalidInputError(f"One set is needed for each of {omegas}")

    raw: Dict[str, List[Pair]] = {}
    for omega in omegas:
        pairs = sorted({(int(i), int(j)) for i, j in sets[omega]})
        if any(i < 0 or j < 0 for i, j in pairs):
            raise InvalidInputError(f"Negative exponent in the set of {omega!r}")
        residues = BayonetSet(n, encode_pairs(n, ((i % n, j % n) for i, j in pairs)))
        if len(residues) != len(pairs) or residues not in family:
            raise PreconditionError(f"The set of {omega!r} does not reduce onto a member of the family")
        raw[omega] = pairs

    if chain is None:
        verdict = is_hajos_family(family, shared=False)
        if not verdict.holds:
            raise PreconditionError("The family is not of Hajós", verdict.certificate)
        chain = verdict.certificate
    if c_chain is None:
        verdict = is_prefix_suffix(code, depth_bound, split_cap)
        if not verdict.holds:
            raise PreconditionError(f"C is not known to be prefix-suffix: {verdict.reason}")
        c_chain = verdict.certificate

    result, result_chain = _complete(chain.steps, n, raw, code, c_chain)

    expected = FiniteCode.from_words(["a" * n] + ["a" * i + omega + "a" * j
                                                  for omega, pairs in raw.items() for i, j in pairs])
    if result != expected:
        raise ConsistencyError("The completion does not spell the substituted sets")
    if not validate_chain(result_chain):
        raise ConsistencyError("The completion chain does not re-validate")
    toolkit_logger.log_verdict("complete_hajos", "yes", f"{len(result)} words, depth {result_chain.depth}")
    return CompletionResult(result, result_chain)
