from fractions import Fraction
from math import gcd

import pytest

from seqlab.analysis import (
    Convergent,
    MetallicSpec,
    expression_cycle,
    expression_prime_search,
    fs_theta,
    lipschitz_probe,
    lucky_cancellations,
    metallic_convergents,
    probe_function_ids,
    product_of_factorials,
    s_family,
)


def test_golden_convergents_are_fibonacci_ratios():
    got = [(c.p, c.q) for c in metallic_convergents(MetallicSpec("A", 1), 8)]
    assert got == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8), (21, 13), (34, 21)]


def test_family_a_identity():
    for n in range(1, 11):
        for c in metallic_convergents(MetallicSpec("A", n), 40):
            assert abs(c.p * c.p - n * c.p * c.q - c.q * c.q) == 1


def test_family_b_rational_root_is_constant():
    # x^2 - x - 2 factors; every convergent is the root itself.
    got = metallic_convergents(MetallicSpec("B", 2), 5)
    assert got == [Convergent(2, 1)] * 5


def test_family_b_irrational_iteration():
    got = [(c.p, c.q) for c in metallic_convergents(MetallicSpec("B", 1), 6)]
    assert got == [(1, 1), (2, 1), (3, 2), (5, 3), (8, 5), (13, 8)]


def test_family_b_converges_to_root():
    x = metallic_convergents(MetallicSpec("B", 3), 60)[-1].as_fraction()
    assert abs(x * x - x - 3) < Fraction(1, 10**6)


def test_convergents_are_reduced():
    for c in metallic_convergents(MetallicSpec("A", 3), 30):
        assert gcd(c.p, c.q) == 1


def test_metallic_spec_validation():
    with pytest.raises(ValueError):
        MetallicSpec("C", 1)
    with pytest.raises(ValueError):
        MetallicSpec("A", 0)


@pytest.mark.parametrize(
    "kind, n, want",
    [
        ("S1", 2, Fraction(1, 2)),
        ("S1", 3, Fraction(1, 3)),
        ("S2", 1, Fraction(1)),
        ("S2", 4, Fraction(1)),
        ("S3", 2, Fraction(1)),
        ("S3", 5, Fraction(1)),
    ],
)
def test_s_family_values(kind, n, want):
    assert s_family(kind, n) == want


def test_s_family_domain():
    with pytest.raises(ValueError):
        s_family("S1", 1)
    with pytest.raises(ValueError):
        s_family("S9", 5)


def test_fs_theta_split():
    fs, theta, thetabar = fs_theta(10)
    assert (fs, theta, thetabar) == (144, 57, 87)
    for x in range(1, 120):
        fs, theta, thetabar = fs_theta(x)
        assert fs == theta + thetabar


def test_lipschitz_probe_known_maxima():
    assert lipschitz_probe("S1", 2, 50) == (Fraction(19, 92), 23)
    assert lipschitz_probe("S2", 1, 50) == (Fraction(7, 8), 40)


def test_lipschitz_probe_rejects():
    with pytest.raises(ValueError):
        lipschitz_probe("S9", 2, 10)
    with pytest.raises(ValueError):
        lipschitz_probe("S1", 10, 10)


def test_probe_registry():
    assert set(probe_function_ids()) == {"S1", "S2", "S3", "Fs", "Theta", "ThetaBar"}


def test_expression_cycle_values():
    assert expression_cycle([2, 3]) == 2**3 + 3**2
    assert expression_cycle([2, 3, 4]) == 2**3 + 3**4 + 4**2


def test_expression_cycle_validation():
    with pytest.raises(ValueError):
        expression_cycle([5])
    with pytest.raises(ValueError):
        expression_cycle([2, 1])
    with pytest.raises(ValueError):
        expression_cycle([2, 4])  # shared factor


def test_expression_search_dedupes_rotations():
    hits = expression_prime_search(3, 2)
    assert [(t, int(v.kind == "prime")) for t, v in hits] == [((2, 3), 1)]


def test_expression_search_sorted_by_value():
    values = [expression_cycle(t) for t, _ in expression_prime_search(6, 3)]
    assert values == sorted(values)


@pytest.mark.parametrize(
    "n, want",
    [
        (1, ()),
        (2, (2,)),
        (24, (4,)),
        (48, (2, 4)),
        (144, (3, 4)),
        (288, (2, 3, 4)),
        (5040, (7,)),
        (7, None),
        (100, None),
    ],
)
def test_product_of_factorials(n, want):
    assert product_of_factorials(n) == want


def test_product_of_factorials_reconstructs():
    from math import factorial, prod

    for n in (6, 36, 120, 720, 864, 3456):
        parts = product_of_factorials(n)
        if parts is not None:
            assert prod(factorial(k) for k in parts) == n


def test_lucky_cancellations_two_digit():
    got = lucky_cancellations(2)
    assert [(a, b) for a, b, _ in got] == [(16, 64), (19, 95), (26, 65), (49, 98)]
    for a, b, frac in got:
        assert Fraction(a, b) == frac
