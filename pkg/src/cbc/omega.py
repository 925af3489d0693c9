import logging
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple, Union

from src.cbc.compatibility import member_adjacency, zero_cycle_free
from src.errors import ConsistencyError, InvalidInputError, PreconditionError
from src.models.cbc import BayonetSet, Cbc, encode_pairs
from src.models.verdicts import Verdict
from src.models.words import FiniteCode, as_word_list, validate_word
from src.utils.logger import ToolkitLogger
from src.words.codes import is_code

logger = logging.getLogger(__name__)
toolkit_logger = ToolkitLogger(__name__)

# boundary between two code words
START = (-1, 0)

State = Tuple[int, int]
StateSet = FrozenSet[State]


class StarRecognizer:
    """
    Subset construction, built on demand, for the star of a finite code

    NFA states are (word index, letters read) plus START; reading the last
    letter of a code word goes back to START, the only accepting state.
    """

    def __init__(self, words: List[str]):
        self.words = words
        self.transitions: Dict[Tuple[StateSet, str], StateSet] = {}

    def _step_state(self, state: State, letter: str) -> Set[State]:
        targets = set()
        if state == START:
            candidates = [(index, 0) for index in range(len(self.words))]
        else:
            candidates = [state]
        for index, position in candidates:
            word = self.words[index]
            if word[position] == letter:
                targets.add(START if position + 1 == len(word) else (index, position + 1))
        return targets

    def step(self, states: StateSet, letter: str) -> StateSet:
        key = (states, letter)
        if key not in self.transitions:
            targets: Set[State] = set()
            for state in states:
                targets |= self._step_state(state, letter)
            self.transitions[key] = frozenset(targets)
        return self.transitions[key]

    def read(self, states: StateSet, word: str) -> StateSet:
        for letter in word:
            states = self.step(states, letter)
        return states


def _a_orbit(recognizer: StarRecognizer, states: StateSet, n: int) -> List[Tuple[StateSet, int]]:
    """Distinct (states after a^i, i mod n) until the sequence repeats"""
    seen = set()
    orbit = []
    current, residue = states, 0
    while (current, residue) not in seen:
        seen.add((current, residue))
        orbit.append((current, residue))
        current = recognizer.step(current, "a")
        residue = (residue + 1) % n
    return orbit


def residue_pairs(M: Union[FiniteCode, Iterable[str]], n: int, omega: str) -> BayonetSet:
    """{(i mod n, j mod n) : a^i omega a^j in M*}, without precondition checks"""
    recognizer = StarRecognizer(as_word_list(M))
    start = frozenset([START])
    pairs = set()
    right_cache: Dict[StateSet, Set[int]] = {}
    for states, i in _a_orbit(recognizer, start, n):
        if not states:
            continue
        crossed = recognizer.read(states, omega)
        if not crossed:
            continue
        if crossed not in right_cache:
            right_cache[crossed] = {j for after, j in _a_orbit(recognizer, crossed, n) if START in after}
        pairs.update((i, j) for j in right_cache[crossed])
    return BayonetSet(n, encode_pairs(n, pairs))


def c_of_omega(M: Union[FiniteCode, Iterable[str]], n: int, omega: str) -> BayonetSet:
    """
    C_M(omega) as a residue-pair set

    Returns a Cbc when it has n elements, otherwise the smaller BayonetSet
    (M is then not maximal) with a warning.

    Raises:
        PreconditionError: a^n is not in M, or M is not a code
    """
    validate_word(omega)
    if not omega:
        raise InvalidInputError("omega must be nonempty")
    words = as_word_list(M)
    if "a" * n not in words:
        raise PreconditionError(f"a^{n} must belong to the code")
    verdict = is_code(words)
    if not verdict.holds:
        raise PreconditionError("The input set is not a code", verdict.certificate.to_dict())

    C = residue_pairs(words, n, omega)
    if not zero_cycle_free(member_adjacency(C), n):
        raise ConsistencyError(f"{{a^{n}}} + C_M({omega}) is not a code")
    if len(C) == n:
        return Cbc(C.n, C.mask)
    logger.warning(f"|C_M({omega})| = {len(C)} < {n}: the code is not maximal")
    return C


def maximality_sweep(M: Union[FiniteCode, Iterable[str]], n: int, max_length: int) -> Verdict:
    """
    Bounded search for an omega with |C_M(omega)| < n

    A deficient omega proves M is not maximal (Verdict.no); finding none up to
    max_length proves nothing and gives Verdict.unknown.
    """
    words = as_word_list(M)
    if "a" * n not in words:
        raise PreconditionError(f"a^{n} must belong to the code")
    verdict = is_code(words)
    if not verdict.holds:
        raise PreconditionError("The input set is not a code", verdict.certificate.to_dict())
    alphabet = sorted({letter for word in words for letter in word} | {"a", "b"})
    checked = 0
    for length in range(1, max_length + 1):
        for letters in product(alphabet, repeat=length):
            omega = "".join(letters)
            if set(omega) == {"a"}:
                continue
            checked += 1
            size = len(residue_pairs(words, n, omega))
            if size < n:
                toolkit_logger.log_verdict("maximality_sweep", "no", f"omega={omega} size={size}")
                return Verdict.no({"omega": omega, "size": size, "n": n},
                                  reason=f"|C_M({omega})| = {size} < {n}")
    toolkit_logger.log_search("maximality_sweep", checked, f"up to length {max_length}")
    return Verdict.unknown({"checked": checked, "max_length": max_length},
                           reason="bounded sweep found no deficient omega (incomplete)")
