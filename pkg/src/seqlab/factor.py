"""Factorization and the arithmetic functions built on top of it.

smarandache_S(n) is the least m with n | m!, computed per prime power
through the factorial valuation rather than by multiplying factorials.
largest_prime_factor backs the P(n) = S(n) search.  is_perfect_power
reports the maximal exponent so callers get one canonical answer.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .primes import DEFAULT_SEED, is_prime, primes_up_to

_TRIAL_LIMIT = 10_000
_TRIAL_PRIMES = primes_up_to(_TRIAL_LIMIT)


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class Factorization:
    """Prime factorization, possibly partial.

    factors holds (prime, exponent) pairs ascending; cofactor is the
    part the time budget left unfactored (1 when complete).  The
    product of p**e over factors times cofactor reconstructs n.
    Primes beyond the deterministic testing range are certified only
    probabilistically.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def reconstruct(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


def _brent_rho(n: int, rng: random.Random, deadline: float | None) -> int:
    # Brent's cycle variant of Pollard rho; n must be odd, composite,
    # and free of factors below _TRIAL_LIMIT.
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise _BudgetExceeded
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                if deadline is not None and time.monotonic() > deadline:
                    raise _BudgetExceeded
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Backtrack one step at a time from the last checkpoint.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, budget: float | None = 10.0, seed: int = DEFAULT_SEED) -> Factorization:
    """Factor n into primes; trial division first, then Brent rho.

    budget is wall-clock seconds for the rho stage (None disables the
    limit).  On timeout the unresolved composite part is returned as
    the cofactor and the result is flagged incomplete.
    """
    if n < 1:
        raise ValueError("factorize is defined for n >= 1")
    found: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    cofactor = 1
    if m > 1:
        if m < _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m, seed=seed):
            # Trial division cleared everything below sqrt(m), or the
            # probabilistic test vouches for m; either way m is prime.
            found[m] = found.get(m, 0) + 1
        else:
            deadline = None if budget is None else time.monotonic() + budget
            rng = random.Random((seed << 64) ^ n)
            stack = [m]
            while stack:
                part = stack.pop()
                if is_prime(part, seed=seed):
                    found[part] = found.get(part, 0) + 1
                    continue
                try:
                    d = _brent_rho(part, rng, deadline)
                except _BudgetExceeded:
                    cofactor = part
                    for rest in stack:
                        cofactor *= rest
                    break
                stack.append(d)
                stack.append(part // d)
    return Factorization(tuple(sorted(found.items())), cofactor)


def largest_prime_factor(n: int, budget: float | None = 10.0, seed: int = DEFAULT_SEED) -> int:
    """P(n): the greatest prime dividing n (n >= 2)."""
    if n < 2:
        raise ValueError("largest_prime_factor is defined for n >= 2")
    f = factorize(n, budget=budget, seed=seed)
    if not f.complete:
        raise ArithmeticError(f"factorization of {n} incomplete within budget")
    return f.factors[-1][0]


def factorial_valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m! (Legendre's formula)."""
    count = 0
    q = p
    while q <= m:
        count += m // q
        q *= p
    return count


def smarandache_S_prime_power(p: int, a: int) -> int:
    """Least m whose factorial contains p at least a times."""
    if a < 1:
        raise ValueError("exponent must be at least 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a == 1:
        return p
    # factorial_valuation is monotone in m and a*p is always enough.
    lo, hi = p, a * p
    while lo < hi:
        mid = (lo + hi) // 2
        if factorial_valuation(mid, p) >= a:
            hi = mid
        else:
            lo = mid + 1
    return lo


def smarandache_S(n: int, seed: int = DEFAULT_SEED) -> int:
    """S(n): the least m with n | m!, using S(1) = 1."""
    if n < 1:
        raise ValueError("smarandache_S is defined for n >= 1")
    if n == 1:
        return 1
    f = factorize(n, seed=seed)
    if not f.complete:
        raise ArithmeticError(f"factorization of {n} incomplete within budget")
    return max(smarandache_S_prime_power(p, a) for p, a in f.factors)


def integer_nth_root(n: int, e: int) -> int:
    """Floor of the e-th root of n, exact for arbitrary magnitude."""
    if n < 0 or e < 1:
        raise ValueError("need n >= 0 and e >= 1")
    if n < 2 or e == 1:
        return n
    # Newton from a power-of-two overestimate; monotone descent.
    x = 1 << ((n.bit_length() + e - 1) // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def is_perfect_power(n: int) -> tuple[int, int] | None:
    """Write n = b**e with e maximal (e >= 2), or None.

    n = 1 reports (1, 2) by convention.  For even n the exponent must
    divide the 2-adic valuation, which prunes the search to almost
    nothing; in particular any even n with a single factor of 2 is
    rejected immediately.
    """
    if n < 1:
        raise ValueError("is_perfect_power is defined for n >= 1")
    if n == 1:
        return (1, 2)
    if n % 2 == 0:
        v2 = (n & -n).bit_length() - 1
        if v2 == 1:
            return None
        candidates = [q for q in primes_up_to(v2) if v2 % q == 0]
    else:
        candidates = primes_up_to(n.bit_length())
    for q in candidates:
        r = integer_nth_root(n, q)
        if r**q == n:
            deeper = is_perfect_power(r)
            if deeper is not None and r > 1:
                b, e = deeper
                return (b, e * q)
            return (r, q)
    return None
