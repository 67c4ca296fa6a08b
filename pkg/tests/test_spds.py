import math

from seqlab.spds import (
    SegmentPartition,
    consecutive_spds_runs,
    is_spds_member,
    pattern_search,
    power_chain_check,
    spds_enumerate,
    square_partitions,
)


def _segment_ok(seg: str) -> bool:
    if len(seg) > 1 and seg[0] == "0":
        return False
    v = int(seg)
    return math.isqrt(v) ** 2 == v


def _oracle_member(square: int) -> bool:
    # Exhaustive cut enumeration over the digit string.
    text = str(square)
    n = len(text)
    for mask in range(1, 2 ** (n - 1)):
        cuts = [0] + [i + 1 for i in range(n - 1) if mask >> i & 1] + [n]
        if all(_segment_ok(text[a:b]) for a, b in zip(cuts, cuts[1:])):
            return True
    return False


def test_partitions_are_proper_and_valid():
    parts = square_partitions(441)
    assert [str(p) for p in parts] == ["4/4/1"]
    assert parts[0].value == 441
    assert len(parts[0].segments) >= 2


def test_partition_zero_segments_allowed():
    assert [str(p) for p in square_partitions(100)] == ["1/0/0"]


def test_partition_rejects_leading_zero_segment():
    # 3600 would need a "00" or "0" split after "36"; only the full
    # per-digit cut survives.
    assert [str(p) for p in square_partitions(3600)] == ["36/0/0"]


def test_membership_spot_values():
    assert is_spds_member(12)  # 144 = 1|4|4
    assert is_spds_member(13)  # 169 = 16|9
    assert is_spds_member(441)  # 194481
    assert not is_spds_member(11)  # 121 has no square split


def test_enumeration_matches_exhaustive_oracle():
    got = spds_enumerate(150)
    want = [r * r for r in range(1, 151) if _oracle_member(r * r)]
    assert got == want
    assert len(got) == 39
    assert got[:8] == [49, 100, 144, 169, 361, 400, 441, 900]


def test_enumeration_contains_published_members():
    members = set(spds_enumerate(506))
    assert {144, 169, 194481, 256036} <= members


def test_consecutive_runs():
    runs = [r for r in consecutive_spds_runs(1000) if r[1] >= 2]
    assert runs[:4] == [(12, 2), (19, 3), (37, 2), (40, 2)]


def test_power_chain():
    # 441 and 441^2 split; 441^4 = 37822859361 does not.
    assert power_chain_check(441) == (True, True, False)


def test_pattern_search_substring():
    hits = pattern_search("44", 1000)
    assert hits[:6] == [144, 441, 1444, 11449, 12544, 14400]
    assert 194481 in hits
    assert len(hits) == 19


def test_segment_partition_str_roundtrip():
    p = SegmentPartition(("16", "9"))
    assert str(p) == "16/9"
    assert p.value == 169
