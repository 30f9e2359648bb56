import json
import subprocess
import sys

import pytest

from ghwlab.cli import run


def _json(capsys, argv):
    code = run(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_periods_q9(capsys):
    code, res = _json(capsys, ["periods", "--p", "3", "--m", "2", "--N", "2"])
    assert code == 0
    assert res["schema_version"] == 1
    (blk,) = res["periods"]
    vals = [per["value"] for per in blk["periods"]]
    assert vals == [{"num": 1, "den": 1}, {"num": -2, "den": 1}]
    assert blk["closed_form"]["labels"] == ["N1=2 lemma (p≡3 mod 4, m even)"]
    assert blk["closed_form"]["match"] is True
    assert blk["periods"][0]["raw"] == [2, 1, 1]


def test_ghw_q27(capsys):
    code, res = _json(capsys, ["ghw", "--p", "3", "--m", "3", "--N", "2", "--family", "A"])
    assert code == 0
    recs = res["hierarchy"]["records"]
    assert [r["d_brute"] for r in recs] == [9, 12, 13]
    assert all(r["corollary"] == ["N1=1"] for r in recs)
    assert all(all(r["checks"].values()) for r in recs)
    assert res["instance"]["N1"] == 1 and res["instance"]["family"] == "A"


def test_ghw_text_table(capsys):
    assert run(["ghw", "--p", "3", "--m", "3", "--N", "2"]) == 0
    out = capsys.readouterr().out
    assert "weight hierarchy ([n, k] = [13, 3])" in out
    assert "N1=1" in out


def test_field_command(capsys):
    code, res = _json(capsys, ["field", "--p", "3", "--m", "2"])
    assert code == 0
    assert res["modulus"] == [1, 0, 1]
    assert res["alpha"] == [1, 1]


def test_code_command(capsys):
    code, res = _json(capsys, ["code", "--p", "5", "--m", "2", "--N", "2", "--family", "B"])
    assert code == 0
    assert res["code"]["weight_distribution"] == {"0": 1, "2": 12, "3": 12}
    assert res["code"]["family_B_weights"] == {"0": {"num": 3, "den": 1}, "1": {"num": 2, "den": 1}}


def test_verify_seeded_skew(capsys):
    code, res = _json(capsys, ["verify", "--p", "5", "--m", "2", "--family", "C", "--skew", "seeded", "--seed", "7"])
    assert code == 0
    assert res["verdict"] == "pass"
    assert res["instance"]["skew"] == "seeded(7)"
    assert run(["verify", "--p", "5", "--m", "2", "--family", "C", "--skew", "seed=7",
                "--format", "json"]) == 0
    again = json.loads(capsys.readouterr().out)
    assert again == res


def test_sweep_small_csv(capsys):
    assert run(["sweep", "--q-max", "27", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "p,m,N,family,verdict,hierarchy"
    assert all(line.split(",")[4] == "pass" for line in lines[1:])
    assert "3,3,2,A,pass,9 12 13" in lines


@pytest.mark.parametrize("argv", [
    ["field", "--p", "4", "--m", "2"],
    ["periods", "--p", "3", "--m", "2", "--N", "3"],
    ["code", "--p", "3", "--m", "2", "--N", "4"],
    ["ghw", "--p", "3", "--m", "2", "--family", "C"],
    ["ghw", "--p", "3", "--m", "2", "--family", "C", "--skew", "seeded"],
    ["ghw", "--p", "3", "--m", "2", "--family", "C", "--skew", "bogus"],
])
def test_precondition_exit_code(argv, capsys):
    assert run(argv) == 2
    assert "precondition failed" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run(["ghw", "--p", "3"])
    assert exc.value.code == 2


def test_budget_truncation_marks_partial_coverage(capsys):
    code, res = _json(capsys, ["ghw", "--p", "3", "--m", "4", "--budget", "5000"])
    assert code == 0
    assert res["hierarchy"]["truncated_at"] == 2
    assert len(res["hierarchy"]["records"]) == 1


def test_output_file(tmp_path, capsys):
    path = tmp_path / "report.csv"
    assert run(["ghw", "--p", "3", "--m", "2", "--format", "csv", "--output", str(path)]) == 0
    assert capsys.readouterr().out == ""
    text = path.read_text(encoding="utf-8")
    assert text.splitlines()[0].startswith("r,d_brute,d_closed,corollary")
    assert text.splitlines()[1].startswith("1,6,6,N1=1")


def test_json_is_stable(capsys):
    argv = ["verify", "--p", "5", "--m", "2", "--N", "3"]
    first = _json(capsys, argv)
    second = _json(capsys, argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ghwlab", "periods", "--p", "5", "--m", "2", "--N", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "semiprimitive" in proc.stdout
