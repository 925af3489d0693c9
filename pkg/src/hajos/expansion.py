import logging
import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from src.cbc.core import dual, is_cbc
from src.cyclic.numbers import divisors
from src.errors import ConsistencyError, InvalidInputError, PreconditionError
from src.models.borders import Border
from src.models.cbc import BayonetSet, Cbc, CbcFamily, Pair, encode_pairs
from src.models.cyclic import FactorizationPair
from src.models.hajos import HajosChain, HajosStep, HtParams, Side
from src.models.verdicts import Verdict

logger = logging.getLogger(__name__)

UNIT = Cbc(1, 1)


def expand_ht(params: HtParams) -> Cbc:
    """
    H_t expansion of an n-cbc into an nt-cbc

    Base pair l = (i, j), taken in sorted order, yields the t words
    (i + shifts[l][s] * n, j + s * n) for s in [0, t).
    """
    base, t = params.base, params.t
    n = base.n
    size = n * t
    pairs: List[Pair] = []
    for (i, j), row in zip(base.pairs, params.shifts):
        for s, k in enumerate(row):
            pairs.append((i + k * n, j + s * n))
    result = BayonetSet(size, encode_pairs(size, pairs))
    if len(result) != size:
        raise ConsistencyError(f"Expansion of {base} produced {len(result)} distinct pairs, expected {size}")
    verdict = is_cbc(size, result)
    if not verdict.holds:
        raise ConsistencyError(f"Expansion of {base} by t={t} is not a {size}-cbc: {verdict.reason}")
    return Cbc(result.n, result.mask)


def _check_modulus(n: int, m: int) -> None:
    if not 0 < m < n or n % m:
        raise PreconditionError(f"The base modulus must be a proper divisor of {n}, got {m}")


def reduce_mod(Y: BayonetSet, m: int) -> BayonetSet:
    """{(i mod m, j mod m) : (i, j) in Y}"""
    if m < 1 or Y.n % m:
        raise PreconditionError(f"{m} does not divide {Y.n}")
    return BayonetSet(m, encode_pairs(m, ((i % m, j % m) for i, j in Y.pairs)))


def is_right_periodic(Y: BayonetSet, m: int) -> Verdict:
    """
    Whether Y belongs to H_t(Y mod m), t = n / m

    The shifts are read back from Y: a pair (i, j) sits in column j // m of
    the base pair (i mod m, j mod m) with shift i // m. Every column of
    every base pair must be hit exactly once and the base must be an m-cbc.
    """
    n = Y.n
    _check_modulus(n, m)
    t = n // m
    columns: Dict[Pair, List[Optional[int]]] = {}
    for i, j in Y.pairs:
        row = columns.setdefault((i % m, j % m), [None] * t)
        s = j // m
        if row[s] is not None:
            return Verdict.no({"pair": [i, j], "column": s},
                              reason=f"column {s} of ({i % m}, {j % m}) is hit twice")
        row[s] = i // m
    if len(columns) != m:
        return Verdict.no(reason=f"Y mod {m} has {len(columns)} pairs, expected {m}")
    for base_pair, row in columns.items():
        if None in row:
            return Verdict.no({"pair": list(base_pair)},
                              reason=f"base pair {base_pair} misses column {row.index(None)}")
    base = BayonetSet(m, encode_pairs(m, columns))
    if not is_cbc(m, base).holds:
        return Verdict.no(reason=f"Y mod {m} is not an {m}-cbc")
    shifts = tuple(tuple(columns[pair]) for pair in base.pairs)
    return Verdict.yes(HtParams(Cbc(base.n, base.mask), t, shifts))


def lift_border(bd: Union[Border, FactorizationPair], n: int, t: int) -> Border:
    """(P + n[t], Q) in Z_{nt}, the border of an H_t expansion"""
    if isinstance(bd, FactorizationPair):
        bd = Border.from_factorization(bd)
    if bd.n != n:
        raise InvalidInputError(f"Border lives in Z_{bd.n}, expected Z_{n}")
    if t < 1:
        raise InvalidInputError(f"Expansion factor must be >= 1, got {t}")
    return Border.of(n * t, (p + n * k for p in bd.P for k in range(t)), bd.Q)


def expand_family(params_per_member: Sequence[HtParams]) -> CbcFamily:
    """H_t applied member-wise; every member must use the same n and t"""
    if not params_per_member:
        raise InvalidInputError("At least one member is needed")
    first = params_per_member[0]
    for params in params_per_member:
        if params.t != first.t or params.base.n != first.base.n:
            raise InvalidInputError("Members must share the base modulus and the expansion factor")
    return CbcFamily.of(expand_ht(params) for params in params_per_member)


def replay_hajos_chain(chain: HajosChain) -> Cbc:
    """Rebuild the target from {b}, last step first"""
    current: Cbc = UNIT
    for step in reversed(chain.steps):
        if step.base != current:
            raise InvalidInputError(f"Step t={step.t} expects base {step.base}, the replay reached {current}")
        expanded = expand_ht(HtParams(step.base, step.t, step.shifts))
        current = dual(expanded) if step.side is Side.DUAL else expanded
    return current


def chain_border(steps: Iterable[Tuple[int, Side]]) -> Border:
    """
    Krasner border built along (t, side) steps listed from the target down

    A direct step lifts the left part; a dual step lifts it and then swaps
    the sides, since (P, Q) borders X exactly when (Q, P) borders dual(X).
    """
    P: Tuple[int, ...] = (0,)
    Q: Tuple[int, ...] = (0,)
    m = 1
    for t, side in reversed(list(steps)):
        lifted = tuple(p + m * k for p in P for k in range(t))
        P, Q = (lifted, Q) if side is Side.DIRECT else (Q, lifted)
        m *= t
    return Border.of(m, P, Q)


def random_hajos_cbc(n: int, rng: random.Random) -> Tuple[Cbc, HajosChain]:
    """Random Hajós n-cbc from random divisors, sides and shifts, with its chain"""
    if n < 1:
        raise InvalidInputError(f"Modulus must be >= 1, got {n}")
    current: Cbc = UNIT
    steps: List[HajosStep] = []
    remaining = n
    while remaining > 1:
        t = rng.choice(divisors(remaining)[1:])
        shifts = tuple(tuple(rng.randrange(t) for _ in range(t)) for _ in range(current.n))
        side = rng.choice((Side.DIRECT, Side.DUAL))
        steps.append(HajosStep(t, side, shifts, current))
        expanded = expand_ht(HtParams(current, t, shifts))
        current = dual(expanded) if side is Side.DUAL else expanded
        remaining //= t
    return current, HajosChain(tuple(reversed(steps)))
