"""Integer helpers: factorization, totient, prime powers.

Thin wrappers over :mod:`sympy.ntheory` so the rest of the package speaks in
plain ``int``/``tuple`` values.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

from sympy import factorint, isprime, prime

__all__ = [
    "factorize",
    "totient",
    "is_prime",
    "is_prime_power",
    "prime_power_parts",
    "prime_factors",
    "divisors",
    "first_primes",
    "gcd",
]


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Return ``((p1, e1), (p2, e2), ...)`` with ascending primes."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    return tuple(sorted((int(p), int(e)) for p, e in factorint(n).items()))


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(n))


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def prime_power_parts(q: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``q == p**k`` and ``k >= 1``, or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return f[0]


def is_prime_power(q: int) -> bool:
    return prime_power_parts(q) is not None


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def first_primes(k: int) -> list[int]:
    return [int(prime(i)) for i in range(1, k + 1)]
