import csv
import io
import json

import pytest

from wrt_torus import __version__
from wrt_torus.asymptotics import expansion_report
from wrt_torus.cli import SWEEP_COLUMNS, main
from wrt_torus.numtheory import SurgerySpec
from wrt_torus.phase import complex_to_json
from wrt_torus.wrt import tau_hat


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tau_json(capsys):
    code, out, _ = run(capsys, "tau", "-a", "2", "-b", "3", "-p", "7", "-n", "5")
    assert code == 0
    js = json.loads(out)
    assert js["spec"] == {"a": 2, "b": 3, "p": 7, "n": 5}
    assert js["precision_bits"] == 53
    assert js["tool_version"] == __version__
    assert js["tau"] == complex_to_json(tau_hat(SurgerySpec(2, 3, 7, 5)).value)
    assert abs(complex(float(js["tau"]["re"]), float(js["tau"]["im"]))
               - complex(0.1909830056250525758977065828171809411398, 0.5877852522924731291687059546390727685977)) < 1e-13


def test_tau_high_precision(capsys):
    code, out, _ = run(capsys, "tau", "-a", "2", "-b", "3", "-p", "7", "-n", "5", "--precision", "150")
    assert code == 0
    assert json.loads(out)["tau"]["re"].startswith("0.19098300562505257589770658281718094")


@pytest.mark.parametrize("argv,msg", [
    (["tau", "-a", "2", "-b", "4", "-p", "9", "-n", "5"], "gcd(a,b) != 1"),
    (["tau", "-a", "2", "-b", "3", "-p", "7", "-n", "4"], "n must be odd"),
    (["expand", "-a", "3", "-b", "5", "-p", "18", "-n", "5"], "gcd(p,ab) != 1"),
    (["sweep", "-a", "2", "-b", "3", "-p", "7", "--n-from", "4", "--n-to", "4"], "n range"),
    (["tau", "-a", "2"], ""),
    (["bogus"], ""),
])
def test_input_errors(capsys, argv, msg):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert msg in err


def test_expand_json_and_csv(capsys):
    code, out, _ = run(capsys, "expand", "-a", "2", "-b", "3", "-p", "13", "-n", "51")
    assert code == 0
    js = json.loads(out)
    rep = expansion_report(SurgerySpec(2, 3, 13, 51))
    assert js["A"] == complex_to_json(rep.A)
    assert js["residual"] == repr(rep.residual)
    code, out, _ = run(capsys, "expand", "-a", "2", "-b", "3", "-p", "13", "-n", "51", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == SWEEP_COLUMNS and len(rows) == 1
    assert rows[0] == rep.csv_row() | {"n": "51"}


def test_sweep_csv_and_workers(capsys):
    base = ["sweep", "-a", "2", "-b", "3", "-p", "13", "--n-from", "51", "--n-to", "71"]
    code, out1, _ = run(capsys, *base)
    assert code == 0
    code, out4, _ = run(capsys, *base, "--workers", "4")
    assert out1 == out4
    body = [ln for ln in out1.splitlines() if not ln.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    assert [int(r["n"]) for r in rows] == list(range(51, 72, 2))
    assert any(ln.startswith("# slope=") for ln in out1.splitlines())


def test_sweep_json(capsys):
    code, out, _ = run(capsys, "sweep", "-a", "2", "-b", "3", "-p", "7", "--n-from", "51", "--n-to", "61",
                       "--format", "json")
    js = json.loads(out)
    assert js["n_range"] == [51, 61]
    assert set(js["summary"]) == {"slope", "median_lower", "median_upper", "max_lower", "max_upper"}


def test_tables(capsys, tmp_path):
    code, out, _ = run(capsys, "tables", "-a", "3", "-b", "5", "-p", "19")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6
    assert sorted((r["h"], r["k"], r["l"]) for r in rows if r["class"] == "SU2") == [("1", "1", "3"), ("3", "1", "1")]
    code, out, _ = run(capsys, "tables", "-a", "2", "-b", "3", "-p", "7")
    assert out.strip() == "h,k,l,class,CS_plus,CS_minus,T_plus,T_minus"
    code, out, _ = run(capsys, "tables", "-a", "2", "-b", "3", "-p", "13")
    assert len(list(csv.DictReader(io.StringIO(out)))) == 3
    target = tmp_path / "t.csv"
    assert main(["tables", "-a", "2", "-b", "3", "-p", "13", "-o", str(target)]) == 0
    assert target.read_text().startswith("h,k,l")


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "tables", "-a", "3", "-b", "5", "-p", "19", "-o", str(tmp_path / "no" / "x.csv"))
    assert code == 3 and "cannot write" in err


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "--only", "lemmas", "--check-seed", "7")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_index_sets(capsys):
    code, out, _ = run(capsys, "verify", "--only", "index-sets")
    assert code == 0
    assert "[index-sets]" in out and "[lemmas]" not in out


def test_repeat_is_byte_identical(capsys):
    argv = ["expand", "-a", "3", "-b", "5", "-p", "19", "-n", "21"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
