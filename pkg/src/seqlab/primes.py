"""Primality testing sized for terms that grow by concatenation.

Below _DETERMINISTIC_BOUND the Miller-Rabin witness set is proven
exhaustive, so verdicts there are certain.  Above it we fall back to
probabilistic rounds drawn from a seeded generator; the seed makes
every verdict reproducible, and deriving the per-call generator from
(seed, n) keeps verdicts independent of scan order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

DEFAULT_SEED = 1729
DEFAULT_ROUNDS = 40

# Sorensen & Webster: these twelve witnesses decide primality for all
# n < 3317044064679887385961981 (comfortably past 2^64).
_DETERMINISTIC_BOUND = 3317044064679887385961981
_DETERMINISTIC_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _sieve(limit: int) -> list[int]:
    if limit < 2:
        return []
    mask = bytearray([1]) * (limit + 1)
    mask[0] = mask[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = bytearray(len(mask[p * p :: p]))
    return [i for i, alive in enumerate(mask) if alive]


_TRIAL_PRIMES = _sieve(1000)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending (plain sieve of Eratosthenes)."""
    return _sieve(limit)


def primes() -> Iterator[int]:
    """Unbounded ascending prime stream."""
    yield 2
    n = 3
    while True:
        if is_prime(n).kind == "prime":
            yield n
        n += 2


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test.

    kind is "prime" or "composite" when the decision is deterministic,
    "probable-prime" otherwise; witness_rounds counts the random rounds
    that backed a probable-prime verdict (0 when deterministic).
    """

    kind: str
    witness_rounds: int = 0

    def __bool__(self) -> bool:
        return self.kind != "composite"


_COMPOSITE = PrimalityVerdict("composite")


def _witnesses_composite(n: int, d: int, s: int, base: int) -> bool:
    # One Miller-Rabin round: True means base proves n composite.
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED) -> PrimalityVerdict:
    """Classify n as prime, composite, or probable-prime.

    Deterministic below _DETERMINISTIC_BOUND.  Above it, small-prime
    trial division and the fixed bases 2 and 3 run first (they reject
    almost every composite cheaply), then `rounds` random bases seeded
    from (seed, n).  A survivor is reported probable-prime with error
    probability at most 4**(-rounds).
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    if n < 2:
        return _COMPOSITE
    for p in _TRIAL_PRIMES:
        if n == p:
            return PrimalityVerdict("prime")
        if n % p == 0:
            return _COMPOSITE
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_BOUND:
        for base in _DETERMINISTIC_WITNESSES:
            if _witnesses_composite(n, d, s, base):
                return _COMPOSITE
        return PrimalityVerdict("prime")
    for base in (2, 3):
        if _witnesses_composite(n, d, s, base):
            return _COMPOSITE
    # Mix n into the seed so the witness stream is per-candidate but
    # still reproducible for a fixed seed.
    rng = random.Random((seed << 64) ^ n)
    for _ in range(rounds):
        base = rng.randrange(2, n - 1)
        if _witnesses_composite(n, d, s, base):
            return _COMPOSITE
    return PrimalityVerdict("probable-prime", witness_rounds=rounds)


def is_probably_prime(n: int, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED) -> bool:
    """Convenience predicate: prime or probable-prime."""
    return bool(is_prime(n, rounds=rounds, seed=seed))
