"""Add-on sequences: terms grow by appending the next generator value.

The odd family runs 1, 13, 135, 1357, ...; even and prime families do
the same over their generators.  Scans over these families answer the
classic questions (which terms are prime, which are perfect powers,
which are twice a prime) with reproducible probabilistic verdicts,
since terms near rank 200 run to hundreds of digits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, product
from typing import Callable, Iterator

from .digits import concat_decimal, digit_count
from .factor import is_perfect_power
from .primes import DEFAULT_ROUNDS, DEFAULT_SEED, is_prime, primes

_FAMILIES = ("odd", "even", "prime", "custom")


@dataclass(frozen=True)
class GeneratorSpec:
    """Which generator stream feeds the add-on construction."""

    family: str
    custom_terms: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "custom" and not self.custom_terms:
            raise ValueError("custom family needs explicit terms")

    def terms(self) -> Iterator[int]:
        if self.family == "odd":
            n = 1
            while True:
                yield n
                n += 2
        elif self.family == "even":
            n = 2
            while True:
                yield n
                n += 2
        elif self.family == "prime":
            yield from primes()
        else:
            yield from self.custom_terms


@dataclass(frozen=True)
class ScanHit:
    """One flagged rank in a scan; detail depends on the kind."""

    rank: int
    kind: str  # "prime" | "probable-prime" | "perfect-power" | "two-p"
    detail: tuple[int, ...] = ()


@dataclass(frozen=True)
class ScanReport:
    family: GeneratorSpec
    limit: int
    hits: tuple[ScanHit, ...]

    def ranks(self) -> list[int]:
        return [h.rank for h in self.hits]


def g_addon(spec: GeneratorSpec, count: int) -> list[int]:
    """First `count` add-on terms: a_1 = g_1, a_i = a_{i-1} ‖ g_i."""
    if count < 1:
        raise ValueError("count must be at least 1")
    gens = list(islice(spec.terms(), count))
    if len(gens) < count:
        raise ValueError(f"generator supplies only {len(gens)} terms")
    terms = [gens[0]]
    for g in gens[1:]:
        terms.append(concat_decimal(terms[-1], g))
    return terms


def term_digit_count(spec: GeneratorSpec, rank: int) -> int:
    """Digits of the rank-th term, summed from the generator stream."""
    if rank < 1:
        raise ValueError("rank must be at least 1")
    return sum(digit_count(g) for g in islice(spec.terms(), rank))


def concat_stream(values: list[int]) -> list[int]:
    """Running concatenations s1, s1‖s2, s1‖s2‖s3, ..."""
    if not values:
        raise ValueError("need at least one value")
    return g_addon(GeneratorSpec("custom", tuple(values)), len(values))


def membership_scan(values: list[int], member: Callable[[int], bool]) -> list[tuple[int, bool]]:
    """Apply a membership predicate to every running concatenation."""
    return [(rank, member(term)) for rank, term in enumerate(concat_stream(values), start=1)]


def prime_rank_scan(
    spec: GeneratorSpec,
    limit: int,
    rounds: int = DEFAULT_ROUNDS,
    seed: int = DEFAULT_SEED,
) -> ScanReport:
    """Ranks i <= limit whose term a_i is prime or probable-prime."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    hits = []
    for rank, term in enumerate(g_addon(spec, limit), start=1):
        verdict = is_prime(term, rounds=rounds, seed=seed)
        if verdict:
            hits.append(ScanHit(rank, verdict.kind))
    return ScanReport(spec, limit, tuple(hits))


def power_and_2p_scan(
    limit: int,
    rounds: int = DEFAULT_ROUNDS,
    seed: int = DEFAULT_SEED,
) -> ScanReport:
    """Scan the even family for perfect powers and terms equal to 2p.

    A two-p hit records the cofactor term // 2 in its detail; rank 1
    (term 2 = 2*1) never qualifies because 1 is not prime.
    """
    spec = GeneratorSpec("even")
    hits = []
    for rank, term in enumerate(g_addon(spec, limit), start=1):
        power = is_perfect_power(term)
        if power is not None:
            hits.append(ScanHit(rank, "perfect-power", power))
        half = term // 2
        if half > 1 and is_prime(half, rounds=rounds, seed=seed):
            hits.append(ScanHit(rank, "two-p", (half,)))
    return ScanReport(spec, limit, tuple(hits))


def prime_digital_stream(count: int, seed: int = DEFAULT_SEED) -> list[int]:
    """First `count` primes whose decimal digits are all prime digits.

    Candidates are digit strings over {2, 3, 5, 7} enumerated by
    length and then lexicographically, which is exactly increasing
    numeric order, filtered by primality.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    out: list[int] = []
    width = 1
    while len(out) < count:
        for digits in product("2357", repeat=width):
            n = int("".join(digits))
            if is_prime(n, seed=seed):
                out.append(n)
                if len(out) == count:
                    break
        width += 1
    return out
