"""Digit-map iteration: orbits, cycles, and full-domain censuses.

Four map families over fixed-width decimal values.  Every orbit on a
finite domain must eventually revisit a value, so each start splits
into a transient tail plus a cycle; a census classifies every start in
a range by its cycle and tracks how long the longest approach was.

Counting conventions, fixed once for the whole package:

* ``tail_len`` is the number of map applications needed before the
  current value first lies on the cycle (a start already on its cycle
  has tail 0).
* ``max_tail`` in a census counts transcript terms through the first
  repeated value, i.e. tail_len + cycle length + 1.  That is the
  figure usually quoted as "iterations needed" in tables of these
  maps, and both conventions are exposed so either can be checked.

Cycles are reported rotated so their minimum element comes first, and
cyclic rotations are merged into one class.
"""

from __future__ import annotations

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator

from .digits import digital_root, reverse_fixed

_KINDS = ("reverse-subtract", "subtract-const", "digit-multiply", "mixed-compose")


@dataclass(frozen=True)
class MapSpec:
    """Which map family, at which digit width, with which constant."""

    kind: str
    width: int | None = None
    c: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown map kind {self.kind!r}")
        if self.kind == "mixed-compose":
            if self.width is None:
                object.__setattr__(self, "width", 2)
            elif self.width != 2:
                raise ValueError("mixed-compose is fixed at width 2")
            if self.c is not None:
                raise ValueError("mixed-compose takes no constant")
            return
        if self.width is None or self.width < 1:
            raise ValueError(f"{self.kind} needs a width >= 1")
        if self.kind == "reverse-subtract":
            if self.c is not None:
                raise ValueError("reverse-subtract takes no constant")
        elif self.kind == "subtract-const":
            if self.c is None or not 1 <= self.c < 10**self.width:
                raise ValueError("subtract-const needs 1 <= c < 10**width")
        else:  # digit-multiply
            if self.c is None or not 2 <= self.c <= 9:
                raise ValueError("digit-multiply needs 2 <= c <= 9")

    def default_domain(self) -> tuple[int, int]:
        """The full-width start range this map is usually swept over."""
        if self.kind == "mixed-compose":
            return (10, 99)
        if self.width == 1:
            return (1, 9)
        return (10 ** (self.width - 1), 10**self.width - 1)


def step(spec: MapSpec, v: int) -> int:
    """Apply the map once.  Width stays frozen: results keep their
    leading zeros conceptually, so values below full width are fine."""
    w = spec.width
    if spec.kind == "mixed-compose":
        if not 10 <= v <= 99:
            raise ValueError("mixed-compose is defined on 10..99")
        a, b = divmod(v, 10)
        return 10 * digital_root(a + b) + abs(a - b)
    if not 0 <= v < 10**w:
        raise ValueError(f"{v} does not fit in {w} digit slots")
    if spec.kind == "reverse-subtract":
        return abs(v - reverse_fixed(v, w))
    if spec.kind == "subtract-const":
        # 0 is terminal by convention, not by the formula.
        return 0 if v == 0 else abs(reverse_fixed(v, w) - spec.c)
    out = 0
    place = 1
    for _ in range(w):
        v, d = divmod(v, 10)
        out += (spec.c * d) % 10 * place
        place *= 10
    return out


@dataclass(frozen=True)
class OrbitReport:
    """A single start iterated to its first value revisit.

    steps holds the distinct values visited, start first; the entry at
    index tail_len is the first one lying on the cycle.  cycle is the
    canonical rotation (minimum first).
    """

    start: int
    steps: tuple[int, ...]
    tail_len: int
    cycle: tuple[int, ...]
    terminated_zero: bool

    @property
    def closure_length(self) -> int:
        """Transcript terms through the first repeat; the census
        max_tail statistic for this start."""
        return self.tail_len + len(self.cycle) + 1


@dataclass(frozen=True)
class CycleClass:
    """One cycle with its basin statistics inside a census range."""

    cycle: tuple[int, ...]
    members: int
    max_tail: int
    max_tail_start: int


@dataclass(frozen=True)
class CensusReport:
    map: MapSpec
    lo: int
    hi: int
    total: int
    zero_count: int
    classes: tuple[CycleClass, ...]

    def to_dict(self) -> dict:
        return {
            "map": {"kind": self.map.kind, "width": self.map.width, "c": self.map.c},
            "domain": {"lo": self.lo, "hi": self.hi},
            "total": self.total,
            "zero_count": self.zero_count,
            "classes": [
                {
                    "cycle": list(cl.cycle),
                    "members": cl.members,
                    "max_tail": cl.max_tail,
                    "max_tail_start": cl.max_tail_start,
                }
                for cl in self.classes
            ],
        }


def _canonical(cycle: list[int]) -> tuple[int, ...]:
    j = cycle.index(min(cycle))
    return tuple(cycle[j:] + cycle[:j])


def orbit(spec: MapSpec, start: int) -> OrbitReport:
    """Iterate from start until a value repeats, then split tail/cycle."""
    path: list[int] = []
    pos: dict[int, int] = {}
    v = start
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = step(spec, v)
    i0 = pos[v]
    cycle = _canonical(path[i0:])
    return OrbitReport(
        start=start,
        steps=tuple(path),
        tail_len=i0,
        cycle=cycle,
        terminated_zero=cycle == (0,),
    )


def _step_table(spec: MapSpec) -> list[int]:
    w = spec.width
    size = 10**w
    if spec.kind == "mixed-compose":
        return [0] * 10 + [step(spec, v) for v in range(10, 100)]
    if spec.kind == "reverse-subtract":
        return [abs(v - reverse_fixed(v, w)) for v in range(size)]
    if spec.kind == "subtract-const":
        c = spec.c
        return [0] + [abs(reverse_fixed(v, w) - c) for v in range(1, size)]
    return [step(spec, v) for v in range(size)]


def _orbit_stats(table: list[int], lo: int, hi: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Yield (start, tail_len, canonical cycle) for every start in range.

    Functional-graph sweep with memoization: once a value's tail and
    cycle are known, every path running into it resolves immediately,
    so the whole range costs little more than one pass.
    """
    state: dict[int, tuple[int, tuple[int, ...]]] = {}
    for s0 in range(lo, hi + 1):
        v = s0
        path: list[int] = []
        pos: dict[int, int] = {}
        while True:
            known = state.get(v)
            if known is not None:
                base_tail, ck = known
                for i in range(len(path) - 1, -1, -1):
                    state[path[i]] = (base_tail + len(path) - i, ck)
                tail = base_tail + len(path)
                break
            p = pos.get(v)
            if p is not None:
                ck = _canonical(path[p:])
                on_cycle = set(ck)
                for i, u in enumerate(path):
                    state[u] = (0, ck) if u in on_cycle else (p - i, ck)
                tail = p
                break
            pos[v] = len(path)
            path.append(v)
            v = table[v]
        yield s0, tail, ck


def _census_chunk(args: tuple[str, int | None, int | None, int, int]) -> tuple[int, dict]:
    kind, width, c, lo, hi = args
    spec = MapSpec(kind, width, c)
    table = _step_table(spec)
    zero = 0
    classes: dict[tuple[int, ...], list[int]] = {}
    for s0, tail, ck in _orbit_stats(table, lo, hi):
        if ck == (0,):
            zero += 1
            continue
        closure = tail + len(ck) + 1
        rec = classes.get(ck)
        if rec is None:
            classes[ck] = [1, closure, s0]
        else:
            rec[0] += 1
            if closure > rec[1]:
                rec[1], rec[2] = closure, s0
    return zero, classes


def census(
    spec: MapSpec,
    lo: int | None = None,
    hi: int | None = None,
    jobs: int = 1,
) -> CensusReport:
    """Classify every start in [lo, hi] by the cycle it falls into.

    Defaults to the map's full-width domain.  With jobs > 1 the range
    is split into contiguous chunks swept in separate processes; the
    merge is commutative, so the report is identical for any job
    count.
    """
    dlo, dhi = spec.default_domain()
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    if lo > hi:
        raise ValueError("empty range")
    if spec.kind == "mixed-compose":
        if lo < 10 or hi > 99:
            raise ValueError("mixed-compose domain is 10..99")
    elif not (0 <= lo and hi < 10**spec.width):
        raise ValueError(f"range exceeds width {spec.width}")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")

    jobs = min(jobs, hi - lo + 1)
    if jobs == 1:
        parts = [_census_chunk((spec.kind, spec.width, spec.c, lo, hi))]
    else:
        span = (hi - lo + 1 + jobs - 1) // jobs
        chunks = [
            (spec.kind, spec.width, spec.c, a, min(a + span - 1, hi))
            for a in range(lo, hi + 1, span)
        ]
        with Pool(processes=jobs) as pool:
            parts = pool.map(_census_chunk, chunks)

    zero_count = 0
    agg: dict[tuple[int, ...], list[int]] = {}
    for zero, classes in parts:
        zero_count += zero
        for ck, (members, maxt, start) in classes.items():
            rec = agg.get(ck)
            if rec is None:
                agg[ck] = [members, maxt, start]
            else:
                rec[0] += members
                if maxt > rec[1] or (maxt == rec[1] and start < rec[2]):
                    rec[1], rec[2] = maxt, start
    ordered = tuple(
        CycleClass(ck, members, maxt, start)
        for ck, (members, maxt, start) in sorted(agg.items(), key=lambda kv: kv[0][0])
    )
    return CensusReport(spec, lo, hi, hi - lo + 1, zero_count, ordered)


def closure_histogram(spec: MapSpec, lo: int | None = None, hi: int | None = None) -> dict[int, int]:
    """How many starts need each transcript length to close.

    Zero-bound orbits are included; keys are closure lengths (the
    max_tail convention), values are start counts.
    """
    dlo, dhi = spec.default_domain()
    lo = dlo if lo is None else lo
    hi = dhi if hi is None else hi
    table = _step_table(spec)
    hist: dict[int, int] = {}
    for _, tail, ck in _orbit_stats(table, lo, hi):
        closure = tail + len(ck) + 1
        hist[closure] = hist.get(closure, 0) + 1
    return dict(sorted(hist.items()))
