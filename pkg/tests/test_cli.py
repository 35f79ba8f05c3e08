"""Command line surface: dispatch, rendering, exit codes, caching."""

import json

import pytest

from macdet.cli import compute_expansion, main, partition_argument
from macdet import cli
from macdet.macdonald import jpoly_modified_schur, jpoly_schur
from macdet.symfunc import sym_from_json
from macdet.verify import CheckResult


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_partition_argument_parsing():
    assert partition_argument("2,2,1") == (2, 2, 1)
    assert partition_argument("0") == ()
    assert partition_argument("3,0") == (3,)
    with pytest.raises(Exception):
        partition_argument("1,2")
    with pytest.raises(Exception):
        partition_argument("x")


def test_jpoly_text_single_box(capsys):
    code, out = run_cli(capsys, "jpoly", "--lambda", "1", "--basis",
                        "monomial", "--method", "oracle", "--format", "text")
    assert code == 0
    assert out.strip() == "(1 - t)*m[1]"


def test_jpoly_empty_partition(capsys):
    for method in ("determinant", "creation", "oracle"):
        code, out = run_cli(capsys, "jpoly", "--lambda", "0",
                            "--method", method)
        assert code == 0
        assert out.strip() == "1"


def test_jpoly_json_round_trip(capsys):
    code, out = run_cli(capsys, "jpoly", "--lambda", "2,1", "--basis",
                        "schur", "--method", "creation", "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["lambda"] == [2, 1]
    assert record["basis"] == "schur"
    assert record["method"] == "creation"
    assert record["n"] == 3
    assert sym_from_json(record["expansion"]) == jpoly_schur((2, 1))


def test_jpoly_latex_modified_matrix(capsys):
    code, out = run_cli(capsys, "jpoly", "--lambda", "2,2,1", "--basis",
                        "smod", "--method", "determinant",
                        "--format", "latex")
    assert code == 0
    header = out.splitlines()[1]
    assert header.count("&") == 4
    assert "S_{2,2,1}[X^{tq}]" in header
    assert "[3,1,1]" in out


def test_jpoly_latex_expansion(capsys):
    code, out = run_cli(capsys, "jpoly", "--lambda", "1,1", "--basis",
                        "schur", "--method", "oracle", "--format", "latex")
    assert code == 0
    assert out.strip() == r"\left(1 - t - t^{2} + t^{3}\right)s_{1,1}"


def test_jpoly_invalid_partition_exits_2(capsys):
    for bad in ("1,2", "x", "-1"):
        with pytest.raises(SystemExit) as err:
            main(["jpoly", "--lambda", bad])
        assert err.value.code == 2
    capsys.readouterr()


def test_jpoly_undersized_n_exits_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["jpoly", "--lambda", "2,1", "--n", "1"])
    assert err.value.code == 2
    capsys.readouterr()


def test_every_method_serves_every_basis():
    lam = (2, 1)
    for basis in ("smod", "schur", "monomial"):
        results = {method: compute_expansion(lam, basis, method)
                   for method in ("determinant", "creation", "oracle")}
        assert results["creation"] == results["determinant"]
        assert results["oracle"] == results["determinant"]
    assert compute_expansion(lam, "smod", "oracle") == jpoly_modified_schur(lam)


def test_verify_eigen_report(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "eigen",
                        "--max-weight", "2")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True
    assert report["suite"] == "eigen"
    assert {c["name"] for c in report["checks"]} == {
        "eigen-first-operator", "eigen-higher-operators"}


def test_verify_appendix_deterministic(capsys):
    argv = ("verify", "--suite", "appendix", "--seed", "7", "--samples", "3")
    code_a, out_a = run_cli(capsys, *argv)
    code_b, out_b = run_cli(capsys, *argv)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_verify_failure_exits_nonzero(capsys, monkeypatch):
    broken = CheckResult("demo", sampled=True)
    broken.record(False, "lam=(9,)")
    monkeypatch.setitem(cli._SUITES, "eigen", lambda args: [broken])
    code, out = run_cli(capsys, "verify", "--suite", "eigen")
    assert code == 1
    report = json.loads(out)
    assert report["passed"] is False
    assert report["checks"][0]["detail"] == "lam=(9,)"


def test_table_enumeration_and_idempotence(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MACDET_CACHE_DIR", str(tmp_path / "cache"))
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    code, _ = run_cli(capsys, "table", "--max-weight", "2", "--basis",
                      "monomial", "--out", str(out_a))
    assert code == 0
    code, _ = run_cli(capsys, "table", "--max-weight", "2", "--basis",
                      "monomial", "--out", str(out_b))
    assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    records = json.loads(out_a.read_text())
    assert [r["lambda"] for r in records] == [[1], [2], [1, 1]]
    for record in records:
        assert record["basis"] == "monomial"
        assert record["method"] == "determinant"
        assert "timing" in record
        expansion = sym_from_json(record["expansion"])
        assert expansion == compute_expansion(
            tuple(record["lambda"]), "monomial", "determinant")


def test_table_unwritable_path_exits_3(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("MACDET_CACHE_DIR", str(tmp_path / "cache"))
    code = main(["table", "--max-weight", "1", "--basis", "smod",
                 "--out", str(tmp_path / "missing" / "t.json")])
    assert code == 3
    assert "cannot write" in capsys.readouterr().err


def test_table_parallel_matches_sequential(tmp_path, monkeypatch, capsys):
    def strip_timing(path):
        records = json.loads(path.read_text())
        for record in records:
            record.pop("timing")
        return records

    monkeypatch.setenv("MACDET_CACHE_DIR", str(tmp_path / "cache-seq"))
    out_seq = tmp_path / "seq.json"
    assert main(["table", "--max-weight", "2", "--basis", "schur",
                 "--out", str(out_seq)]) == 0
    monkeypatch.setenv("MACDET_CACHE_DIR", str(tmp_path / "cache-par"))
    out_par = tmp_path / "par.json"
    assert main(["table", "--max-weight", "2", "--basis", "schur",
                 "--out", str(out_par), "--jobs", "2"]) == 0
    capsys.readouterr()
    assert strip_timing(out_seq) == strip_timing(out_par)
