"""Command line surface.

Subcommands: gen (sequence families), orbit, census, search, verify,
report.  Sequences default to b-file output; structured results are
JSON.  Exit codes: 0 success, 1 verification failure, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .addon import GeneratorSpec, g_addon, power_and_2p_scan, prime_digital_stream, prime_rank_scan
from .analysis import MetallicSpec, expression_cycle, expression_prime_search, lucky_cancellations
from .bfile import render_bfile
from .dynamics import MapSpec, census, orbit
from .primes import DEFAULT_SEED
from .report import census_report, lipschitz_report, metallic_report
from .sieves import erdos_smarandache_stream, nap_sequence, nary_sieve
from .spds import is_spds_member
from .verify import SUITES, run_suite

_GEN_FAMILIES = (
    "odd-addon",
    "even-addon",
    "prime-addon",
    "prime-digital",
    "nap",
    "nary-sieve",
    "erdos-smarandache",
    "spds",
)
_MAP_KINDS = ("reverse-subtract", "subtract-const", "digit-multiply", "mixed-compose")


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--out", help="write output to this path instead of stdout")
    sub.add_argument("--format", choices=("bfile", "json", "csv"), default="bfile")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes where supported")
    sub.add_argument("--seed", type=int, default=None, help="probabilistic-test seed")


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SEQLAB_SEED")
    return int(env) if env else DEFAULT_SEED


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _spds_stream(count: int) -> list[int]:
    out = []
    m = 1
    while len(out) < count:
        if is_spds_member(m):
            out.append(m * m)
        m += 1
    return out


def _take(stream, count: int) -> list[int]:
    out = []
    for v in stream:
        out.append(v)
        if len(out) == count:
            return out
    return out


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    count = args.count
    if count < 1:
        raise ValueError("--count must be at least 1")
    family = args.family
    if family in ("odd-addon", "even-addon", "prime-addon"):
        terms = g_addon(GeneratorSpec(family.removesuffix("-addon")), count)
    elif family == "prime-digital":
        terms = prime_digital_stream(count, seed=seed)
    elif family == "nap":
        terms = nap_sequence(args.t, count)
    elif family == "nary-sieve":
        terms = nary_sieve(count)
    elif family == "erdos-smarandache":
        terms = _take(erdos_smarandache_stream(), count)
    else:
        terms = _spds_stream(count)

    if args.format == "bfile":
        _emit(args, render_bfile(terms))
    elif args.format == "json":
        _emit(args, json.dumps({"family": family, "count": count, "terms": terms}) + "\n")
    else:
        rows = "".join(f"{i},{v}\n" for i, v in enumerate(terms, start=1))
        _emit(args, "index,value\n" + rows)
    return 0


def _map_spec(args: argparse.Namespace) -> MapSpec:
    return MapSpec(args.map, args.width, args.c)


def _cmd_orbit(args: argparse.Namespace) -> int:
    if args.width is None and args.map != "mixed-compose":
        # Width defaults to the start's own digit count.
        args.width = len(str(abs(args.start)))
    rep = orbit(_map_spec(args), args.start)
    payload = {
        "start": rep.start,
        "tail_len": rep.tail_len,
        "cycle": list(rep.cycle),
        "steps": list(rep.steps),
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    rep = census(_map_spec(args), args.lo, args.hi, jobs=args.jobs)
    _emit(args, json.dumps(rep.to_dict(), indent=2) + "\n")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    if args.what == "addon-primes":
        report = prime_rank_scan(GeneratorSpec(args.family), args.limit, seed=seed)
        payload = {
            "search": "addon-primes",
            "family": args.family,
            "limit": args.limit,
            "hits": [{"rank": h.rank, "kind": h.kind} for h in report.hits],
        }
    elif args.what == "even-powers":
        report = power_and_2p_scan(args.limit, seed=seed)
        payload = {
            "search": "even-powers",
            "limit": args.limit,
            "hits": [
                {"rank": h.rank, "kind": h.kind, "detail": list(h.detail)} for h in report.hits
            ],
        }
    elif args.what == "expression-primes":
        hits = expression_prime_search(args.max_base, args.length, seed=seed)
        payload = {
            "search": "expression-primes",
            "max_base": args.max_base,
            "length": args.length,
            "hits": [
                {"xs": list(xs), "value": expression_cycle(xs), "kind": verdict.kind}
                for xs, verdict in hits
            ],
        }
    else:  # lucky
        payload = {
            "search": "lucky",
            "fractions": [
                {"a": a, "b": b, "reduced": f"{v.numerator}/{v.denominator}"}
                for a, b, v in lucky_cancellations(2)
            ],
        }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    result = run_suite(args.suite)
    _emit(args, result.render() + "\n")
    return result.exit_code


def _cmd_report(args: argparse.Namespace) -> int:
    if args.what == "census":
        width = args.width
        if width is None and args.map != "mixed-compose":
            width = 2 if args.map == "digit-multiply" else 3
        spec = MapSpec(args.map, width, args.c)
        paths = census_report(spec, args.lo, args.hi, out_dir=args.out_dir)
    elif args.what == "lipschitz":
        lo = 2 if args.lo is None else args.lo
        hi = 200 if args.hi is None else args.hi
        paths = lipschitz_report(args.fn, lo, hi, out_dir=args.out_dir)
    else:  # metallic
        paths = metallic_report(MetallicSpec(args.family, args.n), args.count, out_dir=args.out_dir)
    for p in paths:
        print(p)
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqlab",
        description="integer sequence families, digit-map censuses, and verification suites",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="generate a sequence family")
    gen.add_argument("family", choices=_GEN_FAMILIES)
    gen.add_argument("--count", type=int, required=True, help="how many terms")
    gen.add_argument("--t", type=int, default=3, help="progression length to avoid (nap)")
    _common_flags(gen)
    gen.set_defaults(func=_cmd_gen)

    orb = subs.add_parser("orbit", help="iterate one start to its cycle")
    orb.add_argument("map", choices=_MAP_KINDS)
    orb.add_argument("--start", type=int, required=True)
    orb.add_argument("--width", type=int, default=None)
    orb.add_argument("--c", type=int, default=None)
    _common_flags(orb)
    orb.set_defaults(func=_cmd_orbit)

    cen = subs.add_parser("census", help="classify every start in a range")
    cen.add_argument("map", choices=_MAP_KINDS)
    cen.add_argument("--width", type=int, default=None)
    cen.add_argument("--c", type=int, default=None)
    cen.add_argument("--lo", type=int, default=None)
    cen.add_argument("--hi", type=int, default=None)
    _common_flags(cen)
    cen.set_defaults(func=_cmd_census)

    sea = subs.add_parser("search", help="run a scan")
    sea.add_argument(
        "what", choices=("addon-primes", "even-powers", "expression-primes", "lucky")
    )
    sea.add_argument("--family", choices=("odd", "even", "prime"), default="odd")
    sea.add_argument("--limit", type=int, default=200)
    sea.add_argument("--max-base", type=int, default=5)
    sea.add_argument("--length", type=int, default=2)
    _common_flags(sea)
    sea.set_defaults(func=_cmd_search)

    ver = subs.add_parser("verify", help="run a conformance suite")
    ver.add_argument("--suite", choices=SUITES, default="all")
    _common_flags(ver)
    ver.set_defaults(func=_cmd_verify)

    repp = subs.add_parser("report", help="write CSV plus figures")
    repp.add_argument("what", choices=("census", "lipschitz", "metallic"))
    repp.add_argument("--out-dir", default=".")
    repp.add_argument("--map", choices=_MAP_KINDS, default="reverse-subtract")
    repp.add_argument("--width", type=int, default=None)
    repp.add_argument("--c", type=int, default=None)
    repp.add_argument("--lo", type=int, default=None)
    repp.add_argument("--hi", type=int, default=None)
    repp.add_argument("--fn", default="S2", help="function id for lipschitz reports")
    repp.add_argument("--family", choices=("A", "B"), default="A")
    repp.add_argument("--n", type=int, default=1)
    repp.add_argument("--count", type=int, default=12)
    _common_flags(repp)
    repp.set_defaults(func=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    raise SystemExit(main())
