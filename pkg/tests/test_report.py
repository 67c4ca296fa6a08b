import csv

from seqlab.analysis import MetallicSpec
from seqlab.dynamics import MapSpec
from seqlab.report import census_report, lipschitz_report, metallic_report


def test_census_report_csv_rows(tmp_path):
    paths = census_report(MapSpec("reverse-subtract", 3), out_dir=tmp_path)
    assert [p.suffix for p in paths] == [".csv", ".png", ".png"]
    assert all(p.exists() and p.stat().st_size > 0 for p in paths)
    with open(paths[0], newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["cycle_min", "cycle_length", "members", "max_tail", "max_tail_start"]
    assert rows[1][:3] == ["99", "5", "810"]
    assert rows[2][:3] == ["0", "1", "90"]  # zero-bound row


def test_lipschitz_report_exact_fractions(tmp_path):
    paths = lipschitz_report("S1", 2, 30, out_dir=tmp_path)
    with open(paths[0], newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["n", "abs_step_diff"]
    assert len(rows) == 29  # one diff per n in [2, 30)
    # Differences are written as exact fractions, not floats.
    assert rows[1] == ["2", "1/6"]


def test_metallic_report_files(tmp_path):
    paths = metallic_report(MetallicSpec("A", 1), 10, out_dir=tmp_path)
    assert [p.suffix for p in paths] == [".csv", ".png"]
    with open(paths[0], newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[1][:3] == ["1", "1", "1"]
    assert len(rows) == 11
