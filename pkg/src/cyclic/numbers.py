from collections import Counter
from typing import List

from src.errors import InvalidInputError


def prime_factors(n: int) -> List[int]:
    """Prime factors of n with multiplicity, smallest first"""
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"Expected a positive integer, got {n!r}")
    factors = []
    candidate = 2
    while candidate * candidate <= n:
        while n % candidate == 0:
            factors.append(candidate)
            n //= candidate
        candidate += 1
    if n > 1:
        factors.append(n)
    return factors


def divisors(n: int) -> List[int]:
    if n < 1:
        raise InvalidInputError(f"Expected a positive integer, got {n!r}")
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _is_pkq(n: int) -> bool:
    """n = p^k or n = p^k q"""
    exponents = Counter(prime_factors(n))
    if len(exponents) <= 1:
        return True
    return len(exponents) == 2 and min(exponents.values()) == 1


def is_hajos_number(n: int) -> bool:
    """Every factorization of Z_n is of Hajós: at most four primes, or p^k q"""
    return len(prime_factors(n)) <= 4 or _is_pkq(n)


def is_cbc_hajos_number(n: int) -> bool:
    """Every compatible set of n-cbc is of Hajós: at most three primes, or p^k q"""
    return len(prime_factors(n)) <= 3 or _is_pkq(n)
