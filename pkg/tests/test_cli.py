"""End-to-end CLI behavior: output formats, exit codes, golden values."""

from __future__ import annotations

import json

import pytest

from pathcount import cli
from pathcount.counting import ENGINES
from pathcount.paths import parse_path_spec


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_plain_single_engine(capsys):
    code, out, _ = run(capsys, "count", "h:1,2,3", "--engine", "recurrence")
    assert code == 0
    assert out == "14\n"


def test_count_all_engines_agree(capsys):
    code, out, _ = run(capsys, "count", "h:1,2,3")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(ENGINES)
    assert {line.split()[0] for line in lines} == set(ENGINES)
    assert {line.split()[1] for line in lines} == {"14"}


def test_count_empty_path(capsys):
    code, out, _ = run(capsys, "count", "d:", "--engine", "dp")
    assert code == 0
    assert out == "1\n"


def test_count_figure_path_golden(capsys):
    # value pinned from dp_oracle (and confirmed by direct enumeration)
    code, out, _ = run(capsys, "count", "w:EENENNEENENNEN")
    assert code == 0
    assert {line.split()[1] for line in out.splitlines()} == {"188"}


def test_count_json_round_trip(capsys):
    code, out, _ = run(capsys, "count", "h:1,2,3", "--format", "json")
    assert code == 0
    for line in out.splitlines():
        record = json.loads(line)
        heights = tuple(record["path"]["heights"])
        assert heights == (1, 2, 3)
        spec = "h:" + ",".join(str(h) for h in heights)
        assert parse_path_spec(spec) == heights
        code2, out2, _ = run(capsys, "count", spec, "--engine", record["engine"])
        assert code2 == 0
        assert out2.strip() == record["count"]


def test_count_parse_errors_exit_2(capsys):
    for bad in ("h:1,x", "h:2,1", "q:1", "w:ENQ"):
        code, _, err = run(capsys, "count", bad)
        assert code == 2
        assert "error:" in err


def test_count_theorem_cap_exit_3(capsys):
    spec = "h:" + ",".join(str(i) for i in range(1, 16))
    code, _, err = run(capsys, "count", spec, "--engine", "theorem")
    assert code == 3
    assert "cap" in err


def test_count_all_skips_theorem_over_cap(capsys):
    spec = "h:" + ",".join(str(i) for i in range(1, 16))
    code, out, err = run(capsys, "count", spec)
    assert code == 0
    engines_run = {line.split()[0] for line in out.splitlines()}
    assert engines_run == set(ENGINES) - {"theorem"}
    assert "skipped" in err


def test_enumerate_small(capsys):
    code, out, _ = run(capsys, "enumerate", "h:1,1")
    assert code == 0
    assert out.splitlines() == ["h:0,0", "h:0,1", "h:1,1"]


def test_enumerate_empty_path(capsys):
    code, out, _ = run(capsys, "enumerate", "h:")
    assert code == 0
    assert out == "h:\n"


def test_enumerate_line_count_matches_catalan(capsys):
    code, out, _ = run(capsys, "enumerate", "h:0,1")
    assert code == 0
    assert len(out.splitlines()) == 2


def test_enumerate_count_only(capsys):
    code, out, _ = run(capsys, "enumerate", "h:1,2,3", "--count-only")
    assert code == 0
    assert out == "14\n"


def test_enumerate_cap(capsys, monkeypatch):
    monkeypatch.setattr(cli, "ENUMERATE_CAP", 5)
    code, _, err = run(capsys, "enumerate", "h:1,2,3")
    assert code == 3
    assert "--count-only" in err
    code, out, _ = run(capsys, "enumerate", "h:1,2,3", "--count-only")
    assert code == 0
    assert out == "14\n"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "h:1,1", "--format", "json")
    assert code == 0
    got = [tuple(json.loads(line)["heights"]) for line in out.splitlines()]
    assert got == [(0, 0), (0, 1), (1, 1)]


def test_symbolic_plain(capsys):
    code, out, _ = run(capsys, "symbolic", "1")
    assert code == 0
    assert out.splitlines() == ["1/1  0", "1/1  1"]


def test_symbolic_count_terms(capsys):
    code, out, _ = run(capsys, "symbolic", "3", "--count-terms")
    assert code == 0
    assert out == "14\n"


def test_symbolic_expand(capsys):
    code, out, _ = run(capsys, "symbolic", "2", "--expand")
    assert code == 0
    coeffs = sorted(line.split()[0] for line in out.splitlines())
    assert coeffs == sorted(["1/1", "1/1", "1/1", "3/2", "1/2"])


def test_symbolic_json(capsys):
    code, out, _ = run(capsys, "symbolic", "2", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["nvars"] == 2
    assert len(record["terms"]) == 5
    assert {"coeff": "1/2", "exponents": [0, 2]} in record["terms"]


def test_symbolic_cap_exit_3(capsys):
    code, _, err = run(capsys, "symbolic", "15")
    assert code == 3
    assert "cap" in err
    code, _, _ = run(capsys, "symbolic", "4", "--theorem-cap", "3")
    assert code == 3


def test_verify_single_suites(capsys):
    for suite in ("lemma", "vandermonde", "eq3", "macmahon"):
        code, out, _ = run(capsys, "verify", suite)
        assert code == 0
        assert out.startswith(f"{suite}: pass")


def test_verify_children_suite(capsys):
    code, out, _ = run(capsys, "verify", "children")
    assert code == 0
    assert "pass" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2
    assert "bogus" in err


def test_verify_det_identity_deterministic_under_seed(capsys):
    code1, out1, _ = run(capsys, "verify", "det-identity", "--seed", "7")
    code2, out2, _ = run(capsys, "verify", "det-identity", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "eq3", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["suite"] == "eq3"
    assert record["passed"] is True


def test_probability_staircase(capsys):
    code, out, _ = run(capsys, "probability", "h:0,1", "2", "2")
    assert code == 0
    assert out == "1/3\n"


def test_probability_unrestricted_is_one(capsys):
    code, out, _ = run(capsys, "probability", "h:2,2", "2", "2")
    assert code == 0
    assert out == "1\n"


def test_probability_derived_example(capsys):
    code, out, _ = run(capsys, "probability", "h:0,0", "2", "1")
    assert code == 0
    assert out == "1/3\n"


def test_probability_empty_path(capsys):
    code, out, _ = run(capsys, "probability", "h:", "0", "3")
    assert code == 0
    assert out == "1\n"


def test_probability_inconsistent_endpoint(capsys):
    code, _, err = run(capsys, "probability", "h:0,1", "3", "2")
    assert code == 2
    assert "inconsistent" in err
    code, _, _ = run(capsys, "probability", "h:0,5", "2", "2")
    assert code == 2


def test_probability_json(capsys):
    code, out, _ = run(capsys, "probability", "h:0,1", "2", "2", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["probability"] == "1/3"
    assert record["favorable"] == "2"
    assert record["total"] == "6"


def test_bench_small_sizes(capsys, monkeypatch):
    monkeypatch.setattr(cli, "BENCH_SIZES", (5, 20))
    code, out, _ = run(capsys, "bench", "--format", "json", "--seed", "3")
    assert code == 0
    rows = json.loads(out)
    timed = [r for r in rows if "seconds" in r]
    refused = [r for r in rows if "status" in r]
    assert {r["engine"] for r in timed} >= {"determinant", "triangular", "recurrence"}
    # n=5 is under the cap so theorem runs there; n=20 must be refused
    assert any(r["engine"] == "theorem" and r["n"] == 20 for r in refused)
    assert any(r["engine"] == "theorem" and r["n"] == 5 for r in timed)


def test_bench_plain_output(capsys, monkeypatch):
    monkeypatch.setattr(cli, "BENCH_SIZES", (5,))
    code, out, _ = run(capsys, "bench")
    assert code == 0
    assert "determinant" in out and "bits" in out
