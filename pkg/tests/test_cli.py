import io
import subprocess
import sys

import pytest

from potcert.cli import main
from potcert.matrixio import serialize_matrix


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), stdout=out)
    return code, out.getvalue()


def test_permanent_both():
    code, out = run("permanent", "--method", "both", "--no-timestamp")
    assert code == 0
    assert "per[naive] = 504" in out and "per[ryser] = 504" in out


def test_permanent_from_file(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text(serialize_matrix([[1, 2], [3, 4]]))
    code, out = run("permanent", "--input", str(path), "--no-timestamp")
    assert code == 0 and "per[ryser] = 10" in out


def test_bad_file_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("matrix 2\n1 1+/2i\n1 1\n")
    code, out = run("permanent", "--input", str(path))
    assert code == 2 and out == ""
    assert "line 2, column 5" in capsys.readouterr().err


def test_missing_file(tmp_path):
    code, _ = run("permanent", "--input", str(tmp_path / "nope.txt"))
    assert code == 2


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("permanent", "--c", "-1")[0] == 2
    assert run("permanent", "--c", "abc")[0] == 2
    assert run("formalize", "--v", "1,0")[0] == 2
    assert run("certify", "neither")[0] == 2


def test_schur_and_ck_legends():
    code, out = run("ck", "--k", "2", "--no-timestamp")
    assert code == 0 and "# index 1: {1,2}" in out
    code, out = run("schur", "--input", "/dev/null")
    assert code == 2
    code, out = run("schur", "--max-n", "4")
    assert code == 2  # the family is 5x5


def test_formalize():
    code, out = run("formalize", "--v", "0,1", "--u", "1,0", "--no-timestamp")
    assert code == 0
    assert "v' = [4/5, 3/5]" in out
    assert "ok   v'v'* + u'u'* == vv* + uu*" in out


def test_c1_analyze_family():
    code, out = run("c1-analyze", "--no-timestamp")
    assert code == 0
    assert "C_1 eigenvalues = [504, 240, 160, 320, 384]" in out
    assert "2378170368000" in out
    assert "FAIL" not in out


def test_c1_analyze_generic():
    code, out = run("c1-analyze", "--v", "1,1,1", "--u", "0,1,2i", "--no-timestamp")
    assert code == 0 and "FAIL" not in out


def test_traces_and_gram_perm():
    code, out = run("traces", "--c", "3", "--no-timestamp")
    assert code == 0 and "FAIL" not in out and "(3,5)" in out
    code, out = run("gram-perm", "--no-timestamp")
    assert code == 0 and "504" in out


def test_certify_pot_c1():
    code, out = run("certify", "pot", "--c", "1", "--no-timestamp")
    assert code == 0 and "verdict HOLDS-ON-THIS-FAMILY" in out


def test_certify_pate_emits(tmp_path):
    path = tmp_path / "cert.txt"
    code, out = run("certify", "pate", "--emit-certificate", str(path), "--no-timestamp")
    assert code == 0 and "verdict VIOLATED" in out
    assert path.read_text().startswith("potcert-certificate 1\nkind pate-k2\n")


def test_timestamp_toggle():
    _, with_ts = run("gram-perm")
    _, without = run("gram-perm", "--no-timestamp")
    assert "generated " in with_ts and "generated " not in without


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "potcert", "permanent", "--no-timestamp"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "504" in proc.stdout
