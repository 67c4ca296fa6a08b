from itertools import combinations

import pytest

from seqlab.sieves import (
    DEFAULT_SCHEDULE,
    SieveSchedule,
    erdos_smarandache,
    nap_sequence,
    nary_sieve,
    representation_count,
)


def _has_three_term_ap(seq):
    return any(b - a == c - b for a, b, c in combinations(seq, 3))


def test_nap_prefix():
    assert nap_sequence(3, 9) == [1, 2, 4, 5, 10, 11, 13, 14, 28]


def test_nap_greedy_is_minimal():
    # Each term must be the smallest extension avoiding a 3-term AP.
    seq = nap_sequence(3, 18)
    assert not _has_three_term_ap(seq)
    for i in range(2, len(seq)):
        prefix = seq[:i]
        for cand in range(prefix[-1] + 1, seq[i]):
            assert _has_three_term_ap(prefix + [cand])


def test_nap_base3_characterization():
    # Term n is 1 plus (n-1 in binary, read as base 3).
    seq = nap_sequence(3, 65)
    for idx, val in enumerate(seq):
        assert val == 1 + int(bin(idx)[2:], 3)
    assert seq[64] == 730


def test_nap_higher_order():
    seq = nap_sequence(4, 12)
    for a, b, c, d in combinations(seq, 4):
        assert not (b - a == c - b == d - c)


def test_schedule_validation():
    with pytest.raises(ValueError):
        SieveSchedule(((1, 1),))
    with pytest.raises(ValueError):
        SieveSchedule(((5, 6),))


def test_default_sieve_prefix():
    assert nary_sieve(11) == [1, 2, 4, 7, 9, 14, 20, 25, 31, 34, 44]


def test_sieve_single_pass_oracle():
    # One pass (m=2, r=1) deletes every second survivor starting at
    # the first: only the even positions remain.
    sched = SieveSchedule(((2, 1),))
    assert nary_sieve(6, sched) == [2, 4, 6, 8, 10, 12]


def test_sieve_prefix_stability():
    # Asking for fewer terms never changes the terms themselves.
    full = nary_sieve(11)
    for n in range(1, 11):
        assert nary_sieve(n) == full[:n]
    with pytest.raises(ValueError):
        nary_sieve(0)


def test_default_schedule_shape():
    assert all(1 <= r <= m for m, r in DEFAULT_SCHEDULE.passes)


def test_erdos_matches_brute_force():
    import sympy

    def brute(n):
        # P(n) = S(n) iff the largest prime p of n satisfies n | p!.
        p = max(sympy.factorint(n))
        f = 1
        for k in range(2, p + 1):
            f *= k
        return f % n == 0

    want = [n for n in range(2, 301) if brute(n)]
    assert erdos_smarandache(300) == want


def test_erdos_prefix():
    assert erdos_smarandache(35) == [
        2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 20, 21, 22, 23,
        26, 28, 29, 30, 31, 33, 34, 35,
    ]


@pytest.mark.parametrize(
    "n, k, m, want",
    [
        (5, 2, 2, 1),   # 1 + 4
        (4, 1, 2, 1),   # 4
        (6, 2, 2, 0),
        (10, None, 3, 2),  # 8+1+1 and ten ones
        (10, 2, 3, 0),
        (10, 3, 3, 1),
        (1, 1, 2, 1),
    ],
)
def test_representation_count(n, k, m, want):
    assert representation_count(n, k, m) == want


def test_representation_rejects_bad_arguments():
    with pytest.raises(ValueError):
        representation_count(0, None, 2)
    with pytest.raises(ValueError):
        representation_count(5, 2, 1)


def test_representation_fixed_sums_to_any():
    for n in range(1, 40):
        total = sum(representation_count(n, k, 2) for k in range(1, n + 1))
        assert representation_count(n, None, 2) == total
