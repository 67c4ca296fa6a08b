"""Primality routines checked against sympy as an independent oracle."""

from itertools import islice

import pytest
import sympy

from seqlab.primes import PrimalityVerdict, is_prime, is_probably_prime, primes, primes_up_to


def test_sieve_matches_sympy_to_10000():
    assert primes_up_to(10_000) == list(sympy.primerange(2, 10_001))


def test_sieve_edge_cases():
    assert primes_up_to(1) == []
    assert primes_up_to(2) == [2]


def test_unbounded_generator_prefix():
    assert list(islice(primes(), 10)) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_is_prime_agrees_with_sympy_small():
    for n in range(-3, 2000):
        assert bool(is_prime(n)) == sympy.isprime(n), n


def test_deterministic_verdicts_are_exact():
    # Below the deterministic witness bound there is no "probable" answer.
    for n in (2, 97, 2**31 - 1, 10**18 + 9):
        v = is_prime(n)
        assert v.kind == "prime"
    assert is_prime(2**31 + 1).kind == "composite"


def test_probable_prime_beyond_deterministic_range():
    p = sympy.nextprime(10**25)
    v = is_prime(p)
    assert v and v.kind == "probable-prime"
    assert not is_prime(p + 2) or sympy.isprime(p + 2)


def test_large_composite_rejected():
    p = sympy.nextprime(10**13)
    q = sympy.nextprime(10**12)
    assert is_prime(p * q).kind == "composite"


def test_verdict_truthiness():
    assert bool(PrimalityVerdict("prime", 0))
    assert bool(PrimalityVerdict("probable-prime", 40))
    assert not PrimalityVerdict("composite", 0)


def test_is_probably_prime_wrapper():
    assert is_probably_prime(10**18 + 9)
    assert not is_probably_prime(10**18 + 10)


def test_seed_reproducibility():
    p = sympy.nextprime(10**26)
    assert is_prime(p, seed=5) == is_prime(p, seed=5)


@pytest.mark.parametrize("n", [0, 1, -7])
def test_nonpositive_and_units_are_not_prime(n):
    assert not is_prime(n)
