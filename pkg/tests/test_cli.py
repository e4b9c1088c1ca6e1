import json
import math
import shutil
from pathlib import Path

import pytest

import svetlichny_core
from cli.svetlichny import main, parse_n_range, parse_spin_range
from cli.verify import Verifier
from svetlichny_core.errors import RangeParseError, SpinParseError


FIXTURES = Path(svetlichny_core.__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    for key in ("SVETLICHNY_OUTPUT_FORMAT", "SVETLICHNY_RESULTS_DIR", "SVETLICHNY_THREADS"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def tampered_copy(name, workdir):
    data = json.loads((FIXTURES / name).read_text(encoding="utf-8"))
    data["parties"][1]["setting1"]["phases"].append({"twice_m": -1, "num": 1, "den": 2})
    path = workdir / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


# Ranges

def test_parse_ranges():
    assert parse_n_range("5") == [5]
    assert parse_n_range("3..8") == [3, 4, 5, 6, 7, 8]
    assert [j.twice_j for j in parse_spin_range("1..4")] == [2, 4, 6, 8]
    assert [j.twice_j for j in parse_spin_range("1/2..5/2")] == [1, 3, 5]
    with pytest.raises(RangeParseError):
        parse_n_range("8..3")
    with pytest.raises(RangeParseError):
        parse_n_range("three")
    with pytest.raises(RangeParseError):
        parse_spin_range("1/2..2")
    with pytest.raises(SpinParseError):
        parse_spin_range("x..2")


# bounds

def test_bounds_single(capsys):
    rows = run_json(capsys, "bounds", "--n", "3", "--quiet")
    assert rows == [{"n": 3, "lhv_bound": 4.0, "quantum_bound": 5.65685425, "fixed_sign_bound": 4.0}]


def test_bounds_range_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "4..8", "--format", "csv", "--quiet")
    assert code == 0
    lines = out.split("\r\n")
    assert lines[0] == "n,lhv_bound,quantum_bound,fixed_sign_bound"
    assert len([line for line in lines[1:] if line]) == 5
    assert lines[5].startswith("8,128,")


def test_bounds_rejects_two_parties(capsys):
    code, _, err = run(capsys, "bounds", "--n", "2", "--quiet")
    assert code == 2
    assert "n must be ≥ 3" in err


def test_bounds_respects_party_ceiling(capsys):
    code, _, err = run(capsys, "bounds", "--n", "1100", "--quiet")
    assert code == 2
    assert "n must be ≤ 16" in err


def test_bounds_table_output(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "3..4", "--quiet")
    assert code == 0
    assert "Svetlichny Bounds" in out
    assert "5.65685425" in out


def test_output_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SVETLICHNY_OUTPUT_FORMAT", "json")
    code, out, _ = run(capsys, "bounds", "--n", "5", "--quiet")
    assert code == 0
    assert json.loads(out)[0]["lhv_bound"] == 16.0


def test_json_output_is_deterministic(capsys):
    first = run(capsys, "scheme", "--n", "4", "--spin", "3/2", "--format", "json", "--quiet")
    second = run(capsys, "scheme", "--n", "4", "--spin", "3/2", "--format", "json", "--quiet")
    assert first == second


# scheme

def test_scheme_fermion(capsys, workdir):
    report = run_json(capsys, "scheme", "--n", "3", "--spin", "1/2", "--quiet")
    assert report["value"] == pytest.approx(4 * math.sqrt(2), abs=1e-8)
    assert report["violated"] is True
    written = json.loads((workdir / "results" / "scenario_n3_j1.json").read_text(encoding="utf-8"))
    assert written["n"] == 3 and written["twice_j"] == 1


def test_scheme_spin_one_auto_signs(capsys):
    report = run_json(capsys, "scheme", "--n", "8", "--spin", "1", "--auto-signs", "--quiet")
    assert report["ratio"] == pytest.approx(0.984476, abs=1e-6)
    assert report["violated"] is False


def test_scheme_explicit_signs_and_output(capsys, workdir):
    target = workdir / "out" / "boson.json"
    report = run_json(
        capsys, "scheme", "--n", "3", "--spin", "1", "--signs", "++,++,+-",
        "--output", str(target), "--oracle", "--quiet",
    )
    assert report["value"] == pytest.approx(2 * (2 + 4 * math.sqrt(2)) / 3, abs=1e-8)
    assert report["difference"] <= 1e-9
    assert target.exists()


def test_scheme_rejects_zero_spin(capsys):
    code, _, err = run(capsys, "scheme", "--n", "3", "--spin", "0", "--quiet")
    assert code == 2
    assert "NonZeroSpinRequired" in err


def test_scheme_integer_spin_needs_signs(capsys):
    code, _, err = run(capsys, "scheme", "--n", "3", "--spin", "1", "--quiet")
    assert code == 2
    assert "--signs or --auto-signs" in err


def test_scheme_signs_must_match_n(capsys):
    code, _, _ = run(capsys, "scheme", "--n", "4", "--spin", "1", "--signs", "++,++,+-", "--quiet")
    assert code == 2


def test_scheme_half_integer_rejects_signs(capsys):
    code, _, err = run(capsys, "scheme", "--n", "3", "--spin", "1/2", "--signs", "++,++,+-", "--quiet")
    assert code == 2
    assert "ZeroPhaseForbidden" in err
    code, _, _ = run(capsys, "scheme", "--n", "3", "--spin", "3/2", "--auto-signs", "--quiet")
    assert code == 2


def test_scheme_max_parties(capsys):
    code, _, err = run(capsys, "scheme", "--n", "17", "--spin", "1/2", "--quiet")
    assert code == 2
    assert "n must be ≤ 16" in err


# evaluate

def test_evaluate_fixture(capsys):
    report = run_json(
        capsys, "evaluate", "--scenario", str(FIXTURES / "three_party_half.json"), "--quiet"
    )
    assert report["value"] == pytest.approx(4 * math.sqrt(2), abs=1e-8)
    assert "oracle_value" not in report


def test_evaluate_with_oracle(capsys):
    report = run_json(
        capsys, "evaluate", "--scenario", str(FIXTURES / "four_party_spin_one.json"),
        "--oracle", "--quiet",
    )
    assert report["value"] == pytest.approx(8.87580567, abs=1e-7)
    assert report["difference"] <= 1e-9


def test_evaluate_names_broken_table(capsys, workdir):
    path = tampered_copy("three_party_half.json", workdir)
    code, _, err = run(capsys, "evaluate", "--scenario", str(path), "--quiet")
    assert code == 2
    assert "ScenarioParseError" in err
    assert "party 2, setting 1: m=-1/2" in err


def test_evaluate_missing_file(capsys, workdir):
    code, _, err = run(capsys, "evaluate", "--scenario", str(workdir / "nope.json"), "--quiet")
    assert code == 2
    assert "not found" in err


def test_evaluate_rejects_undecodable_file(capsys, workdir):
    path = workdir / "latin.json"
    path.write_bytes(b'{"n": 3, "\xff": 1}')
    code, _, err = run(capsys, "evaluate", "--scenario", str(path), "--quiet")
    assert code == 2
    assert "ScenarioParseError" in err


def test_evaluate_rejects_non_list_parties(capsys, workdir):
    data = json.loads((FIXTURES / "three_party_half.json").read_text(encoding="utf-8"))
    data["parties"] = 5
    path = workdir / "scalar.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, _, err = run(capsys, "evaluate", "--scenario", str(path), "--quiet")
    assert code == 2
    assert "parties must be a list" in err


def test_evaluate_zero_dimension_guard(capsys):
    code, _, err = run(
        capsys, "evaluate", "--scenario", str(FIXTURES / "three_party_half.json"),
        "--oracle", "--dimension-guard", "0", "--quiet",
    )
    assert code == 3
    assert "DimensionGuardExceeded" in err


def test_evaluate_oracle_guard(capsys):
    code, _, err = run(
        capsys, "evaluate", "--scenario", str(FIXTURES / "four_party_spin_one.json"),
        "--oracle", "--dimension-guard", "80", "--quiet",
    )
    assert code == 3
    assert "DimensionGuardExceeded" in err


# search

def test_search_five_parties(capsys):
    result = run_json(capsys, "search", "--n", "5", "--quiet")
    assert result["best_value"] == 8
    assert result["evaluated"] == 4 ** 5
    assert len(result["assignments"]) == 64


def test_search_three_parties_table(capsys):
    code, out, _ = run(capsys, "search", "--n", "3", "--quiet")
    assert code == 0
    assert "++,++,+-" in out


def test_search_guard_exit_code(capsys):
    code, _, err = run(capsys, "search", "--n", "15", "--quiet")
    assert code == 3
    assert "SearchGuardExceeded" in err


def test_search_rejects_zero_max_reported(capsys):
    code, _, err = run(capsys, "search", "--n", "3", "--max-reported", "0", "--quiet")
    assert code == 2
    assert "max_reported must be ≥ 1" in err


def test_search_zero_guard_is_honoured(capsys):
    code, _, err = run(capsys, "search", "--n", "4", "--search-guard", "0", "--quiet")
    assert code == 3
    assert "SearchGuardExceeded" in err


def test_search_rejects_range(capsys):
    code, _, _ = run(capsys, "search", "--n", "3..5", "--quiet")
    assert code == 2


# sweep

def test_sweep_spin_one_csv(capsys, workdir):
    target = workdir / "sweep.csv"
    code, out, _ = run(
        capsys, "sweep", "--n", "3..8", "--spin", "1", "--format", "csv",
        "--output", str(target), "--threads", "2", "--quiet",
    )
    assert code == 0
    lines = [line for line in out.split("\r\n") if line]
    assert lines[0] == "n,twice_j,value,lhv_bound,ratio,violated"
    assert [line.rsplit(",", 1)[1] for line in lines[1:]] == ["true"] * 5 + ["false"]
    assert target.read_text(encoding="utf-8").replace("\r\n", "\n") == out.replace("\r\n", "\n")


def test_sweep_half_integer_range(capsys):
    rows = run_json(capsys, "sweep", "--n", "4", "--spin", "1/2..5/2", "--quiet")
    assert [row["twice_j"] for row in rows] == [1, 3, 5]
    for row in rows:
        assert row["value"] == pytest.approx(8 * math.sqrt(2), abs=1e-7)


def test_sweep_ratio_increases_with_spin(capsys):
    rows = run_json(capsys, "sweep", "--n", "3", "--spin", "1..10", "--quiet")
    ratios = [row["ratio"] for row in rows]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))


# logging

def test_log_file_written(capsys, workdir):
    log_file = workdir / "run.log"
    code, _, _ = run(capsys, "search", "--n", "4", "--log-file", str(log_file))
    assert code == 0
    entries = [json.loads(line) for line in log_file.read_text(encoding="utf-8").splitlines()]
    assert entries[0]["source"] == "cli"
    assert any(e["source"] == "search" for e in entries)


def test_errors_are_logged(capsys, workdir):
    log_file = workdir / "run.log"
    run(capsys, "search", "--n", "15", "--log-file", str(log_file))
    last = json.loads(log_file.read_text(encoding="utf-8").splitlines()[-1])
    assert last["level"] == "error"
    assert "SearchGuardExceeded" in last["message"]


# verify

def test_verifier_quick_passes():
    results = Verifier(quick=True, threads=2).run()
    failed = [(r.name, r.detail) for r in results if not r.passed]
    assert failed == []
    names = [r.name for r in results]
    assert "sign_search_maxima" in names
    assert "fixture:three_party_spin_one" in names


def test_verify_names_tampered_fixture(capsys, workdir):
    fixtures = workdir / "fixtures"
    shutil.copytree(FIXTURES, fixtures)
    data = json.loads((fixtures / "four_party_half.json").read_text(encoding="utf-8"))
    data["expected"] = 11.0
    (fixtures / "four_party_half.json").write_text(json.dumps(data), encoding="utf-8")

    code, out, err = run(capsys, "verify", "--quick", "--fixtures-dir", str(fixtures), "--quiet")
    assert code == 4
    assert "fixture:four_party_half" in err
    assert "fixture:three_party_half" not in err
    assert "FAIL" in out
