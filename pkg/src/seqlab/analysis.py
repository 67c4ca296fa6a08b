"""Rational approximation of metallic means, S-derived functions with
difference probes, cyclic power expressions, and two brute-force
searches (products of factorials, anomalous cancellations).

Everything rational is an exact Fraction; floats appear nowhere in
the arithmetic, only in plots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .factor import factorize, smarandache_S, smarandache_S_prime_power
from .primes import DEFAULT_ROUNDS, DEFAULT_SEED, PrimalityVerdict, is_prime, primes_up_to


@dataclass(frozen=True)
class MetallicSpec:
    """Family A solves x^2 - nx - 1 = 0, family B solves x^2 - x - n = 0;
    the target is the positive root in both cases."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "B"):
            raise ValueError("family must be A or B")
        if self.n < 1:
            raise ValueError("n must be at least 1")


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise ValueError("denominator must be positive")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


def metallic_convergents(spec: MetallicSpec, count: int) -> list[Convergent]:
    """Successive rational approximations closing in on the root.

    Family A uses the continued fraction [n; n, n, ...], whose
    convergents alternate around the root.  Family B iterates
    x -> 1 + n/x from 1 in exact arithmetic; when 1 + 4n is a perfect
    square the root itself is rational, and it is returned outright
    (the iteration would circle it forever without landing).
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    out: list[Convergent] = []
    if spec.family == "A":
        p, q, pp, qq = spec.n, 1, 1, 0
        for _ in range(count):
            out.append(Convergent(p, q))
            p, q, pp, qq = spec.n * p + pp, spec.n * q + qq, p, q
        return out
    disc = 1 + 4 * spec.n
    s = math.isqrt(disc)
    if s * s == disc:
        root = Fraction(1 + s, 2)
        return [Convergent(root.numerator, root.denominator)] * count
    x = Fraction(1)
    for _ in range(count):
        out.append(Convergent(x.numerator, x.denominator))
        x = 1 + Fraction(spec.n) / x
    return out


def s_family(kind: str, n: int) -> Fraction:
    """S1(n) = 1/S(n) for n >= 2, S2(n) = S(n)/n for n >= 1,
    S3(n) = n/S(n) for n >= 2, all exact."""
    if kind == "S1":
        if n < 2:
            raise ValueError("S1 needs n >= 2")
        return Fraction(1, smarandache_S(n))
    if kind == "S2":
        if n < 1:
            raise ValueError("S2 needs n >= 1")
        return Fraction(smarandache_S(n), n)
    if kind == "S3":
        if n < 2:
            raise ValueError("S3 needs n >= 2")
        return Fraction(n, smarandache_S(n))
    raise ValueError(f"unknown kind {kind!r}")


def fs_theta(x: int) -> tuple[int, int, int]:
    """(fs, theta, thetabar) at x.

    fs sums S(p**x) over all primes p <= x; theta restricts the sum to
    primes dividing x, thetabar to primes not dividing x.  The three
    are computed independently (theta walks the factorization of x)
    so that fs = theta + thetabar stays a real cross-check.
    """
    if x < 1:
        raise ValueError("x must be at least 1")
    below = primes_up_to(x)
    fs = sum(smarandache_S_prime_power(p, x) for p in below)
    theta = sum(smarandache_S_prime_power(p, x) for p, _ in factorize(x).factors)
    thetabar = sum(smarandache_S_prime_power(p, x) for p in below if x % p != 0)
    return fs, theta, thetabar


_PROBE_FUNCTIONS: dict[str, Callable[[int], Fraction]] = {
    "S1": lambda n: s_family("S1", n),
    "S2": lambda n: s_family("S2", n),
    "S3": lambda n: s_family("S3", n),
    "Fs": lambda n: Fraction(fs_theta(n)[0]),
    "Theta": lambda n: Fraction(fs_theta(n)[1]),
    "ThetaBar": lambda n: Fraction(fs_theta(n)[2]),
}


def probe_function_ids() -> tuple[str, ...]:
    return tuple(_PROBE_FUNCTIONS)


def lipschitz_probe(fn_id: str, lo: int, hi: int) -> tuple[Fraction, int]:
    """Largest one-step jump |f(n+1) - f(n)| for n in [lo, hi).

    An empirical record, not a proof of any Lipschitz bound; returns
    the maximum and the n achieving it (smallest on ties).
    """
    if fn_id not in _PROBE_FUNCTIONS:
        raise ValueError(f"unknown function {fn_id!r}")
    if lo >= hi:
        raise ValueError("need lo < hi")
    f = _PROBE_FUNCTIONS[fn_id]
    best = None
    best_n = lo
    prev = f(lo)
    for n in range(lo, hi):
        nxt = f(n + 1)
        diff = abs(nxt - prev)
        if best is None or diff > best:
            best, best_n = diff, n
        prev = nxt
    return best, best_n


def expression_cycle(xs: Iterable[int]) -> int:
    """Evaluate x1**x2 + x2**x3 + ... + xn**x1.

    Entries must all exceed 1 and be coprime as a set; both filters
    reject the degenerate tuples that make the prime question silly.
    """
    terms = tuple(xs)
    if len(terms) < 2:
        raise ValueError("need at least two entries")
    if any(x <= 1 for x in terms):
        raise ValueError("entries must exceed 1")
    if math.gcd(*terms) != 1:
        raise ValueError("entries must be coprime as a set")
    return sum(terms[i] ** terms[(i + 1) % len(terms)] for i in range(len(terms)))


def expression_prime_search(
    max_base: int,
    length: int,
    rounds: int = DEFAULT_ROUNDS,
    seed: int = DEFAULT_SEED,
) -> list[tuple[tuple[int, ...], PrimalityVerdict]]:
    """Admissible tuples up to max_base whose expression value is
    (probably) prime.

    The expression value is invariant under cyclic rotation, so each
    rotation class is reported once, by its lexicographically least
    representative, and results come back sorted by value then tuple.
    """
    if max_base < 2 or length < 2:
        raise ValueError("need max_base >= 2 and length >= 2")
    seen: set[tuple[int, ...]] = set()
    hits = []

    def tuples(prefix: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for x in range(2, max_base + 1):
            yield from tuples(prefix + (x,))

    for xs in tuples(()):
        rotations = [xs[i:] + xs[:i] for i in range(length)]
        canon = min(rotations)
        if canon in seen:
            continue
        seen.add(canon)
        if math.gcd(*canon) != 1:
            continue
        value = expression_cycle(canon)
        verdict = is_prime(value, rounds=rounds, seed=seed)
        if verdict:
            hits.append((canon, verdict, value))
    hits.sort(key=lambda h: (h[2], h[0]))
    return [(xs, verdict) for xs, verdict, _ in hits]


def product_of_factorials(n: int) -> tuple[int, ...] | None:
    """A multiset of arguments k >= 2 with product of k! equal to n.

    Depth-first over factorials in descending order, so 24 resolves
    to (4,) rather than (2, 2, 3); None when no product exists.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return ()
    bases: list[tuple[int, int]] = []
    k, f = 2, 2
    while f <= n:
        bases.append((k, f))
        k += 1
        f *= k
    bases.reverse()

    def descend(rest: int, idx: int) -> tuple[int, ...] | None:
        if rest == 1:
            return ()
        for i in range(idx, len(bases)):
            k, f = bases[i]
            if rest % f == 0:
                tail = descend(rest // f, i)
                if tail is not None:
                    return (k,) + tail
        return None

    found = descend(n, 0)
    if found is None:
        return None
    return tuple(sorted(found))


def lucky_cancellations(num_digits: int = 2) -> list[tuple[int, int, Fraction]]:
    """Two-digit fractions a/b that survive crossing out a shared digit.

    Deleting one occurrence of a digit common to numerator and
    denominator must leave a one-digit fraction exactly equal to a/b.
    Pairs whose shared digit is 0 are excluded as trivial, as are
    a >= b.  The survivors are the four classics.
    """
    if num_digits != 2:
        raise ValueError("only two-digit fractions are supported")
    out = []
    for a in range(10, 100):
        for b in range(a + 1, 100):
            value = Fraction(a, b)
            found = False
            for da in str(a):
                if da == "0" or da not in str(b):
                    continue
                ra = _delete_once(str(a), da)
                rb = _delete_once(str(b), da)
                if int(rb) != 0 and Fraction(int(ra), int(rb)) == value:
                    found = True
            if found:
                out.append((a, b, value))
    return out


def _delete_once(text: str, ch: str) -> str:
    return text.replace(ch, "", 1)
