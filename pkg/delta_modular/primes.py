"""
Small-integer number theory: trial-division primality, with factorization, divisors and integer roots from sympy.
"""
from math import isqrt
from typing import Iterator

import sympy


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    for i in range(5, isqrt(n) + 1, 6):
        if n % i == 0 or n % (i + 2) == 0:
            return False
    return True


def smallest_prime_above(n: int) -> int:
    """Least prime p with n < p."""
    p = max(n + 1, 2)
    while not is_prime(p):
        p += 1
    return p


def primes_up_to(n: int) -> list[int]:
    """Primes p ≤ n."""
    return list(sympy.primerange(2, n + 1))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs in ascending order."""
    if n < 1:
        raise ValueError(f"Cannot factorize {n}")
    return sorted((int(p), int(e)) for p, e in sympy.factorint(n).items())


def divisors(n: int) -> list[int]:
    return [int(d) for d in sympy.divisors(n)]


def ordered_factorizations(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All (d_1, ..., d_r) of positive integers with product n, in lexicographic order."""
    if r == 1:
        yield (n,)
        return
    for d in divisors(n):
        for rest in ordered_factorizations(n // d, r - 1):
            yield (d,) + rest


def iroot(n: int, k: int) -> int:
    """Largest integer m with m**k ≤ n."""
    if n < 0 or k < 1:
        raise ValueError(f"iroot needs n ≥ 0 and k ≥ 1, got n={n}, k={k}")
    return int(sympy.integer_nthroot(n, k)[0])
