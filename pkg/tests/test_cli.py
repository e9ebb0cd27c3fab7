import csv
import io
import json


from cyclomat import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_det_bq(capsys):
    code, out = run(capsys, "det", "--matrix", "bq", "--q", "7", "--m", "2")
    assert code == 0 and json.loads(out)["det"] == {"domain": "F_7", "value": 1}


def test_det_dq_exact(capsys):
    code, out = run(capsys, "det", "--matrix", "dq-", "--q", "5", "--char", "quadratic", "--engine", "exact")
    assert json.loads(out)["det"] == {"domain": "Z", "value": "-2"}


def test_det_bq_extension_singular(capsys):
    _, out = run(capsys, "det", "--matrix", "bq", "--q", "9", "--m", "3")
    assert json.loads(out)["det"]["value"] == [0, 0]


def test_det_engine_mismatch(capsys):
    code, _ = run(capsys, "det", "--matrix", "dq+", "--q", "13", "--char", "5", "--engine", "exact")
    assert code == 2
    code, _ = run(capsys, "det", "--matrix", "bq", "--q", "7", "--m", "2", "--engine", "complex")
    assert code == 2


def test_pell(capsys):
    _, out = run(capsys, "pell", "--index", "7", "--mod", "49")
    row = json.loads(out)
    assert (row["P"], row["Q"]) == ("22", "37")
    _, out = run(capsys, "pell", "--index", "0", "--mod", "10")
    row = json.loads(out)
    assert (row["P"], row["Q"]) == ("0", "2")


def test_gamma(capsys):
    _, out = run(capsys, "gamma-p", "--p", "5", "--x", "5", "--precision", "2")
    assert json.loads(out)["value"] == "1"
    code, _ = run(capsys, "gamma-p", "--p", "3", "--x", "5")
    assert code == 2


def test_verify_unknown_check(capsys):
    code, _ = run(capsys, "verify", "--check", "nosuch")
    assert code == 2


def test_verify_t1b_exit_code(capsys):
    code, out = run(capsys, "verify", "--check", "T1b", "--q-max", "121", "--jobs", "1")
    rows = [json.loads(l) for l in out.splitlines()]
    failed = [r["params"]["q"] for r in rows if r["verdict"] == "fail"]
    assert failed == [9]
    assert code == 1


def test_verify_csv_and_out(tmp_path, capsys):
    path = tmp_path / "r.csv"
    code = cli.main(["verify", "--check", "L21", "SUN-24", "--q-max", "30", "--format", "csv", "--out", str(path), "--jobs", "1"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert {r["check_id"] for r in rows} == {"L21", "SUN-24"}
    assert any(r["verdict"] == "skipped" for r in rows)


def test_search_cli(capsys):
    code, out = run(capsys, "search", "qp2", "--max", "100", "--jobs", "1")
    assert code == 0 and json.loads(out)["hits"] == [13, 31]
    code, _ = run(capsys, "search", "qp2", "--max", "100000000")
    assert code == 2


def test_bad_subcommand(capsys):
    assert cli.main(["frobnicate"]) == 2
