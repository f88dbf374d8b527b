import csv
import io
import json
import math
import subprocess
import sys

import pytest

from kummerbessel import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_oracle(capsys):
    code, out, _ = run(capsys, "eval", "--a", "2.5", "--b", "3.7", "--x", "1.0",
                       "--methods", "oracle", "--n", "100")
    assert code == 0
    method, value, terms, conv = out.strip().split("\t")
    assert method == "oracle" and conv == "converged=True"
    assert float(value) == pytest.approx(2.009719470686, abs=5e-13)


def test_eval_e(capsys):
    code, out, _ = run(capsys, "eval", "--a", "1", "--b", "1", "--x", "1",
                       "--methods", "oracle")
    assert code == 0 and float(out.split("\t")[1]) == pytest.approx(math.e, rel=1e-16)


def test_eval_all_methods(capsys):
    code, out, _ = run(capsys, "eval", "--x", "3")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == ["oracle", "rep18", "rep19"]


def test_eval_b_equals_2a_exits_1(capsys):
    code, _, err = run(capsys, "eval", "--a", "2.5", "--b", "5.0", "--x", "1",
                       "--methods", "rep19")
    assert code == 1 and "b = 2a" in err


def test_usage_errors_exit_2(capsys):
    for argv in (["eval"], ["eval", "--x", "1", "--methods", "rep20"],
                 ["table1", "--steps", "0"], ["table1", "--xmin", "5", "--xmax", "1"],
                 ["eval", "--x", "1", "--n", "3,5"], ["nope"], ["eval", "--x", "1", "--n", "-3"]):
        with pytest.raises(SystemExit) as info:
            cli.main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_domain_error_exits_1(capsys):
    code, _, err = run(capsys, "coulomb", "--E", "-1")
    assert code == 1 and err.startswith("error:")


def test_table1_default(capsys):
    code, out, _ = run(capsys, "table1")
    rows = rows_of(out)
    assert code == 0 and [float(r["x"]) for r in rows] == [float(i) for i in range(1, 11)]
    row5 = rows[4]
    assert float(row5["exact"]) == pytest.approx(46.326312197243, abs=5e-13)
    assert float(row5["rep18"]) == pytest.approx(46.326312197243, abs=5e-13)
    assert float(row5["rep19"]) == pytest.approx(46.326312197242, abs=5e-13)
    assert float(rows[8]["rep19"]) == pytest.approx(1480.110668255821, abs=5e-12)


def test_table1_abs_err_round_trip(capsys):
    _, out, _ = run(capsys, "table1")
    for r in rows_of(out):
        exact = float(r["exact"])
        assert float(r["abs_err_18"]) == abs(float(r["rep18"]) - exact)
        assert float(r["abs_err_19"]) == abs(float(r["rep19"]) - exact)


def test_table1_more_terms_reduce_error(capsys):
    _, out20, _ = run(capsys, "table1")
    _, out40, _ = run(capsys, "table1", "--n", "40")
    err20 = float(rows_of(out20)[-1]["abs_err_19"])
    err40 = float(rows_of(out40)[-1]["abs_err_19"])
    assert err40 < err20


def test_table1_json(capsys):
    _, out, _ = run(capsys, "table1", "--format", "json", "--steps", "2")
    data = json.loads(out)
    assert [d["x"] for d in data] == [5.0, 10.0]
    assert set(data[0]) == {"x", "exact", "rep18", "rep19", "abs_err_18", "abs_err_19"}


def test_deviation_files(tmp_path, capsys):
    out = tmp_path / "dev.csv"
    code, _, _ = run(capsys, "deviation", "--a", "3", "--b", "2", "--N", "3,15",
                     "--out", str(out))
    assert code == 0
    low = rows_of((tmp_path / "dev_N3.csv").read_text())
    high = rows_of((tmp_path / "dev_N15.csv").read_text())
    assert len(low) == len(high) == 100
    for lo, hi in zip(low, high):
        assert abs(float(hi["delta_rep18"])) < abs(float(lo["delta_rep18"]))


def test_deviation_exact_gives_zero(capsys):
    _, out, _ = run(capsys, "deviation", "--N", "60", "--xmax", "2", "--steps", "4",
                    "--methods", "rep18")
    for r in rows_of(out):
        assert abs(float(r["delta_rep18"])) <= 1e-15


def test_deviation_blank_cell_on_error(monkeypatch, capsys):
    from kummerbessel.errors import DegenerateDenominatorError

    def boom(*args):
        raise DegenerateDenominatorError("1F1 + F vanishes")

    monkeypatch.setattr(cli, "relative_deviation", boom)
    code, out, err = run(capsys, "deviation", "--steps", "2", "--methods", "rep18")
    assert code == 0
    assert [r["delta_rep18"] for r in rows_of(out)] == ["", ""]
    assert err.count("warning:") == 2


def test_coulomb_free_particle(capsys):
    code, out, _ = run(capsys, "coulomb", "--Z", "0", "--E", "0.5", "--l", "0")
    rows = rows_of(out)
    assert code == 0 and len(rows) == 20
    rs = [float(r["r"]) for r in rows]
    assert rs[0] > 0 and all(b > a for a, b in zip(rs, rs[1:]))
    for r in rows:
        s = math.sin(float(r["r"]))
        assert abs(float(r["psi_tra"]) - s) <= 1e-10
        assert abs(float(r["psi_exact"]) - s) <= 1e-10


def test_coulomb_equivalence(capsys):
    _, out, _ = run(capsys, "coulomb", "--Z", "1", "--E", "0.5", "--l", "0", "--N", "80")
    assert max(float(r["rel_diff"]) for r in rows_of(out)) <= 1e-8


def test_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert cli.main(["table1", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_unwritable_output_exits_1(tmp_path, capsys):
    code, _, err = run(capsys, "table1", "--out", str(tmp_path / "missing" / "t.csv"))
    assert code == 1 and "error" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kummerbessel", "eval", "--x", "1",
                           "--methods", "oracle"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("oracle\t2.0097194706864")
