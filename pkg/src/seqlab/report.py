"""Rendered reports: CSV tables with matplotlib figures beside them.

Each report writes its delimited data first, then one or two PNG
figures into the same directory, and returns every path it created.
The Agg backend is forced so reports work without a display.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from math import isqrt, sqrt
from pathlib import Path

from .analysis import MetallicSpec, lipschitz_probe, metallic_convergents, probe_function_ids
from .dynamics import MapSpec, census, closure_histogram


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def census_report(
    spec: MapSpec,
    lo: int | None = None,
    hi: int | None = None,
    out_dir: str | Path = ".",
    stem: str | None = None,
) -> list[Path]:
    """Census class table as CSV plus basin figures.

    Writes <stem>.csv (one row per cycle class), a bar chart of class
    sizes, and a histogram of closure lengths over the whole range.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if stem is None:
        bits = [spec.kind, f"w{spec.width}"]
        if spec.c is not None:
            bits.append(f"c{spec.c}")
        stem = "census_" + "_".join(bits)
    rep = census(spec, lo, hi)
    hist = closure_histogram(spec, lo, hi)

    csv_path = out / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["cycle_min", "cycle_length", "members", "max_tail", "max_tail_start"])
        for cl in rep.classes:
            writer.writerow([cl.cycle[0], len(cl.cycle), cl.members, cl.max_tail, cl.max_tail_start])
        if rep.zero_count:
            writer.writerow([0, 1, rep.zero_count, "", ""])

    plt = _pyplot()
    paths = [csv_path]

    fig, ax = plt.subplots(figsize=(7, 4))
    labels = [f"{cl.cycle[0]}\n(len {len(cl.cycle)})" for cl in rep.classes]
    sizes = [cl.members for cl in rep.classes]
    if rep.zero_count:
        labels.append("0")
        sizes.append(rep.zero_count)
    ax.bar(range(len(sizes)), sizes, color="#4878a8")
    ax.set_xticks(range(len(sizes)), labels, fontsize=8)
    ax.set_ylabel("starts")
    ax.set_title(f"{spec.kind} width {spec.width}: basin sizes on {rep.lo}..{rep.hi}")
    fig.tight_layout()
    p = out / f"{stem}_classes.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(list(hist.keys()), list(hist.values()), color="#a85448", width=0.8)
    ax.set_xlabel("terms until first repeat")
    ax.set_ylabel("starts")
    ax.set_title(f"{spec.kind} width {spec.width}: closure length distribution")
    fig.tight_layout()
    p = out / f"{stem}_closure_hist.png"
    fig.savefig(p, dpi=120)
    plt.close(fig)
    paths.append(p)
    return paths


def lipschitz_report(
    fn_id: str,
    lo: int,
    hi: int,
    out_dir: str | Path = ".",
    stem: str | None = None,
) -> list[Path]:
    """One-step difference trace of an S-derived function.

    CSV columns are n and |f(n+1) - f(n)| as an exact fraction; the
    figure plots the same differences with the record jump marked.
    """
    if fn_id not in probe_function_ids():
        raise ValueError(f"unknown function {fn_id!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if stem is None:
        stem = f"lipschitz_{fn_id.lower()}"
    from .analysis import _PROBE_FUNCTIONS  # registry shared with the probe

    f = _PROBE_FUNCTIONS[fn_id]
    ns = list(range(lo, hi))
    values = [f(n) for n in range(lo, hi + 1)]
    diffs = [abs(values[i + 1] - values[i]) for i in range(len(ns))]
    max_diff, argmax = lipschitz_probe(fn_id, lo, hi)

    csv_path = out / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "abs_step_diff"])
        for n, d in zip(ns, diffs):
            writer.writerow([n, str(d)])

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, [float(d) for d in diffs], lw=0.8, color="#4878a8")
    ax.plot([argmax], [float(max_diff)], "o", color="#a85448", label=f"max {max_diff} at {argmax}")
    ax.set_xlabel("n")
    ax.set_ylabel(f"|{fn_id}(n+1) - {fn_id}(n)|")
    ax.set_title(f"{fn_id} one-step differences on [{lo}, {hi})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def metallic_report(
    spec: MetallicSpec,
    count: int,
    out_dir: str | Path = ".",
    stem: str | None = None,
) -> list[Path]:
    """Convergent table with an error-decay figure.

    The CSV lists p, q, and the signed error against the true root;
    the figure shows |error| on a log scale.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if stem is None:
        stem = f"metallic_{spec.family.lower()}{spec.n}"
    convs = metallic_convergents(spec, count)
    if spec.family == "A":
        root = (spec.n + sqrt(spec.n**2 + 4)) / 2
    else:
        disc = 1 + 4 * spec.n
        s = isqrt(disc)
        root = float(Fraction(1 + s, 2)) if s * s == disc else (1 + sqrt(disc)) / 2
    errors = [conv.p / conv.q - root for conv in convs]

    csv_path = out / f"{stem}.csv"
    with open(csv_path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "p", "q", "error"])
        for k, (conv, err) in enumerate(zip(convs, errors), start=1):
            writer.writerow([k, conv.p, conv.q, repr(err)])

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ks = list(range(1, len(convs) + 1))
    ax.semilogy(ks, [abs(e) if e else float("nan") for e in errors], "o-", color="#4878a8")
    ax.set_xlabel("convergent index")
    ax.set_ylabel("|p/q - root|")
    ax.set_title(f"family {spec.family}, n = {spec.n}: approximation error")
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]
