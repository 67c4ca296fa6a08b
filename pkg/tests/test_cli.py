"""End-to-end runs of the command line surface, in process."""

import json

import pytest

from seqlab.bfile import parse_bfile
from seqlab.cli import main


def test_gen_bfile_default(capsys):
    assert main(["gen", "prime-digital", "--count", "100"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("100 33223\n")
    assert parse_bfile(out)[:4] == [2, 3, 5, 7]


def test_gen_json(capsys):
    assert main(["gen", "odd-addon", "--count", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"family": "odd-addon", "count": 3, "terms": [1, 13, 135]}


def test_gen_csv(capsys):
    assert main(["gen", "nary-sieve", "--count", "3", "--format", "csv"]) == 0
    assert capsys.readouterr().out == "index,value\n1,1\n2,2\n3,4\n"


def test_gen_nap_order_flag(capsys):
    assert main(["gen", "nap", "--count", "5", "--t", "4"]) == 0
    values = parse_bfile(capsys.readouterr().out)
    assert values[:3] == [1, 2, 3]


def test_gen_out_file(tmp_path, capsys):
    target = tmp_path / "b.txt"
    assert main(["gen", "spds", "--count", "4", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert parse_bfile(target.read_text()) == [49, 100, 144, 169]


def test_gen_count_validation(capsys):
    assert main(["gen", "spds", "--count", "0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_unknown_family_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "fibonacci", "--count", "3"])
    assert exc.value.code == 2


def test_orbit_payload_keys(capsys):
    assert main(["orbit", "digit-multiply", "--c", "7", "--start", "68"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == ["start", "tail_len", "cycle", "steps"]
    assert payload["cycle"] == [26, 42, 84, 68]
    assert payload["tail_len"] == 0


def test_orbit_width_defaults_to_start(capsys):
    assert main(["orbit", "reverse-subtract", "--start", "1019"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["steps"][1] == abs(1019 - 9101)


def test_orbit_missing_c_domain_error(capsys):
    assert main(["orbit", "subtract-const", "--width", "2", "--start", "52"]) == 2
    assert "error:" in capsys.readouterr().err


def test_census_schema(capsys):
    assert main(["census", "mixed-compose"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["map"] == {"kind": "mixed-compose", "width": 2, "c": None}
    assert payload["domain"] == {"lo": 10, "hi": 99}
    assert payload["total"] == 90
    assert payload["zero_count"] == 0
    lengths = {len(c["cycle"]) for c in payload["classes"]}
    assert lengths == {2, 4, 6, 12, 18}


def test_census_jobs_flag_byte_identical(capsys):
    assert main(["census", "reverse-subtract", "--width", "3"]) == 0
    seq = capsys.readouterr().out
    assert main(["census", "reverse-subtract", "--width", "3", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == seq


def test_search_lucky(capsys):
    assert main(["search", "lucky"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [f["a"] for f in payload["fractions"]] == [16, 19, 26, 49]
    assert payload["fractions"][0]["reduced"] == "1/4"


def test_search_addon_primes(capsys):
    assert main(["search", "addon-primes", "--family", "odd", "--limit", "20"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert [h["rank"] for h in payload["hits"]] == [2, 10, 16]


def test_search_expression_primes(capsys):
    assert main(["search", "expression-primes", "--max-base", "3", "--length", "2"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["hits"] == [{"xs": [2, 3], "value": 17, "kind": "prime"}]


def test_verify_oracles_suite(capsys):
    assert main(["verify", "--suite", "oracles"]) == 0
    out = capsys.readouterr().out
    assert "0 fail" in out


def test_report_census_writes_files(tmp_path, capsys):
    assert main(["report", "census", "--width", "3", "--out-dir", str(tmp_path)]) == 0
    listed = [line for line in capsys.readouterr().out.splitlines() if line]
    assert len(listed) == 3
    suffixes = sorted(p.suffix for p in tmp_path.iterdir())
    assert suffixes == [".csv", ".png", ".png"]


def test_report_lipschitz_writes_files(tmp_path):
    assert main(["report", "lipschitz", "--fn", "S1", "--hi", "40", "--out-dir", str(tmp_path)]) == 0
    names = {p.suffix for p in tmp_path.iterdir()}
    assert names == {".csv", ".png"}


def test_report_metallic_writes_files(tmp_path):
    assert main(["report", "metallic", "--family", "A", "--n", "2", "--count", "8",
                 "--out-dir", str(tmp_path)]) == 0
    assert {p.suffix for p in tmp_path.iterdir()} == {".csv", ".png"}


def test_seed_env_fallback(monkeypatch, capsys):
    monkeypatch.setenv("SEQLAB_SEED", "99")
    assert main(["gen", "prime-digital", "--count", "5"]) == 0
    with_env = capsys.readouterr().out
    monkeypatch.delenv("SEQLAB_SEED")
    assert main(["gen", "prime-digital", "--count", "5", "--seed", "99"]) == 0
    assert capsys.readouterr().out == with_env
