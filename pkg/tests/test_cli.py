import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from grasshodge import cli, lefschetz, racah
from grasshodge.cli import RunConfig, UsageError, emit_table, load_sequence, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_sigma_json_object(capsys):
    code, out, err = run_cli(capsys, "sigma", "--N", "6", "--k", "1", "--method", "both")
    assert code == 0
    data = json.loads(out)
    assert data["sigma"] == "618125/3"
    assert data["positive"] is True
    assert data["agree"] is True
    assert data["n"] == 4 and data["T"] == 8


def test_sigma_usage_error(capsys):
    code, out, err = run_cli(capsys, "sigma", "--N", "3", "--k", "5")
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_scan_bound_clean_range(capsys):
    code, out, err = run_cli(capsys, "scan-bound", "--Tmin", "3", "--Tmax", "25")
    assert code == 0
    report = json.loads(out)
    assert report["T_range"] == [3, 25]
    assert report["violations"] == []
    assert all(case["n"] == 0 for case in report["equality_cases"])
    assert "elapsed_ms" not in report
    assert "ms" in err  # timing goes to stderr only


def test_scan_bound_single_T_flag(capsys):
    code, out, _ = run_cli(capsys, "scan-bound", "--T", "7", "--jobs", "1")
    assert code == 0
    assert json.loads(out)["T_range"] == [7, 7]


def test_verify_needed_harmonic(capsys):
    code, out, err = run_cli(capsys, "verify-needed", "--T", "30", "--sequence", "harmonic")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 30
    assert all(row["holds"] for row in rows)
    assert all(row["covered"] for row in rows)
    assert rows[0]["sequence"] == "harmonic"


def test_verify_needed_rejects_short_file(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("1\n3/2\n")
    code, out, err = run_cli(capsys, "verify-needed", "--T", "9", "--sequence", str(path))
    assert code == 2
    assert "holds 2 values" in err


def test_verify_needed_rejects_malformed_file(tmp_path, capsys):
    path = tmp_path / "seq.txt"
    path.write_text("1\nbogus\n2\n")
    code, out, err = run_cli(capsys, "verify-needed", "--T", "3", "--sequence", str(path))
    assert code == 2
    assert "seq.txt:2" in err


def test_verify_needed_reads_file_sequence(tmp_path, capsys):
    # linear sequence: concave increasing, decimals and rationals mixed
    path = tmp_path / "seq.txt"
    path.write_text("1\n2.0\n3\n6/2\n")
    code, out, err = run_cli(capsys, "verify-needed", "--T", "4", "--sequence", str(path))
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(r["holds"] for r in rows)
    # H_4 = 6/2 = 3 repeats H_3, so the tail is not concave increasing
    code, out, err = run_cli(capsys, "verify-needed", "--T", "5", "--sequence", str(path))
    rows = [json.loads(line) for line in out.splitlines()]
    assert all(r["concave"] is False for r in rows)
    assert "exploratory" in err


def test_verify_needed_random_seed_reproducible(capsys):
    code1, out1, _ = run_cli(capsys, "verify-needed", "--T", "12", "--sequence", "random", "--seed", "7")
    code2, out2, _ = run_cli(capsys, "verify-needed", "--T", "12", "--sequence", "random", "--seed", "7")
    assert code1 == code2 == 0
    assert out1 == out2
    _, out3, _ = run_cli(capsys, "verify-needed", "--T", "12", "--sequence", "random", "--seed", "8")
    assert out3 != out1


def test_reruns_byte_identical(capsys):
    args = ("verify-grassmannian", "--Nmax", "8", "--method", "both", "--format", "csv")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_verify_grassmannian_csv_sorted(capsys):
    code, out, _ = run_cli(capsys, "verify-grassmannian", "--Nmax", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "N,k,n,T,sigma,sigma_approx,positive,method,agree"
    keys = [tuple(map(int, line.split(",")[:2])) for line in lines[1:]]
    assert keys == sorted(keys)
    assert all(line.split(",")[6] == "true" for line in lines[1:])


def test_verify_grassmannian_kset_filter(capsys):
    code, out, _ = run_cli(capsys, "verify-grassmannian", "--Nmax", "9", "--kset", "2", "--format", "csv")
    assert code == 0
    rows = out.splitlines()[1:]
    assert [int(r.split(",")[0]) for r in rows] == list(range(4, 10))
    assert all(int(r.split(",")[1]) == 2 for r in rows)


def test_verify_pn_and_ortho(capsys):
    code, out, _ = run_cli(capsys, "verify-pn", "--nmax", "10")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows[4]["tau"] == "87/10"
    assert all(r["commutator_ok"] and r["tau_positive"] for r in rows)

    code, out, _ = run_cli(capsys, "verify-ortho", "--Tmin", "3", "--Tmax", "10")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["T"] for r in rows] == list(range(3, 11))
    assert all(r["ok"] for r in rows)


def test_table_racah_sorted_and_filtered(capsys):
    code, out, _ = run_cli(capsys, "table", "--kind", "racah", "--T", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "T,n,s,value,value_approx"
    keys = [tuple(map(int, line.split(",")[:3])) for line in lines[1:]]
    assert keys == sorted(keys) and len(keys) == 25

    code, out, _ = run_cli(capsys, "table", "--kind", "racah", "--T", "5", "--n", "1", "--s", "4", "--format", "csv")
    lines = out.splitlines()
    assert len(lines) == 2
    assert lines[1] == "5,1,4,-2/3," + "-0.666666666667"


def test_table_sigma_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--kind", "sigma", "--Nmax", "3", "--format", "json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [(r["N"], r["k"]) for r in rows] == [(1, 0), (2, 0), (2, 1), (3, 0), (3, 1)]
    assert rows[1]["sigma"] == "129"


def test_table_out_of_range_filter(capsys):
    code, _, err = run_cli(capsys, "table", "--kind", "racah", "--T", "5", "--n", "9")
    assert code == 2


def test_infeasible_ranges(capsys):
    assert run_cli(capsys, "scan-bound", "--Tmin", "9", "--Tmax", "3")[0] == 2
    assert run_cli(capsys, "scan-bound", "--Tmin", "2", "--Tmax", "5")[0] == 2
    assert run_cli(capsys, "verify-grassmannian", "--Nmax", "0")[0] == 2
    assert run_cli(capsys, "verify-needed", "--T", "2")[0] == 2
    assert run_cli(capsys, "verify-ortho", "--Tmax", "9")[0] == 2  # Tmin missing


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["scan-bound", "--Tmax", "not-a-number"])
    assert exc.value.code == 2


def test_fault_injection_flips_exit_code(monkeypatch, capsys):
    real = lefschetz.sigma_verdict

    def corrupted(inst, method="both"):
        v = real(inst, method=method)
        if inst.N == 4 and inst.k == 2:
            return lefschetz.SigmaVerdict(
                N=v.N, k=v.k, n=v.n, T=v.T,
                sigma=-v.sigma, positive=False, method=v.method, agree=v.agree,
            )
        return v

    monkeypatch.setattr(lefschetz, "sigma_verdict", corrupted)
    code, out, err = run_cli(capsys, "verify-grassmannian", "--Nmax", "5")
    assert code == 1
    rows = [json.loads(line) for line in out.splitlines()]
    flagged = [r for r in rows if not r["positive"]]
    assert [(r["N"], r["k"]) for r in flagged] == [(4, 2)]
    assert "FAILED" in err


def test_fault_injection_scan(monkeypatch, capsys):
    real = racah.bound_scan

    def corrupted(T_min, T_max, jobs=None):
        report = real(T_min, T_max, jobs=jobs)
        hit = racah.ScanHit(T=T_min, n=1, s=2, value=Fraction(9, 8))
        return racah.ScanReport(
            T_min=report.T_min,
            T_max=report.T_max,
            violations=(hit,),
            equality_cases=report.equality_cases,
            rows_checked=report.rows_checked,
            elapsed_ms=report.elapsed_ms,
        )

    monkeypatch.setattr(racah, "bound_scan", corrupted)
    code, out, _ = run_cli(capsys, "scan-bound", "--Tmin", "3", "--Tmax", "5", "--jobs", "1")
    assert code == 1
    assert json.loads(out)["violations"] == [{"T": 3, "n": 1, "s": 2, "value": "9/8"}]


def test_emit_table_empty_rows_gives_header_only():
    buf = io.StringIO()
    emit_table([], ["a", "b"], "csv", buf)
    assert buf.getvalue() == "a,b\n"
    buf = io.StringIO()
    emit_table([], ["a", "b"], "json", buf)
    assert buf.getvalue() == ""


def test_emit_table_cell_rendering():
    buf = io.StringIO()
    rows = [{"x": "1/3", "flag": True, "tags": ("p", "q"), "gap": None}]
    emit_table(rows, ["x", "flag", "tags", "gap"], "csv", buf)
    assert buf.getvalue().splitlines()[1] == "1/3,true,p;q,"


def test_load_sequence_blank_lines_ok(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("\n1\n\n 3/2 \n")
    assert load_sequence(str(path)) == (Fraction(1), Fraction(3, 2))
    empty = tmp_path / "empty.txt"
    empty.write_text("\n\n")
    with pytest.raises(UsageError):
        load_sequence(str(empty))
    with pytest.raises(UsageError):
        load_sequence(str(tmp_path / "missing.txt"))


def test_default_jobs_env_override(monkeypatch):
    monkeypatch.setenv(racah.JOBS_ENV_VAR, "3")
    assert racah.default_jobs() == 3
    monkeypatch.setenv(racah.JOBS_ENV_VAR, "zero?")
    with pytest.raises(ValueError):
        racah.default_jobs()
    monkeypatch.delenv(racah.JOBS_ENV_VAR)
    assert racah.default_jobs() >= 1


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "grasshodge", "sigma", "--N", "2", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sigma"] == "3"


def test_run_config_is_plain_data():
    config = RunConfig(command="sigma", N=2, k=1)
    assert config.method == "closed"
    assert config.output_format == "json"
