import json

import pytest

from sproutgames.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nimber_command_examples(capsys):
    code, out, _ = run_cli(capsys, "nimber", "CS[3,1,4,1]")
    assert code == 0
    assert "nimber: 4" in out
    assert "first player" in out
    code, out, _ = run_cli(capsys, "nimber", "BS2[3,3]")
    assert code == 0
    assert "nimber: 0" in out and "second player" in out
    code, out, _ = run_cli(capsys, "nimber", "CS[0,0,9,0]")
    assert code == 0
    assert "nimber: 0" in out and "terminal" in out


def test_nimber_sum_and_json(capsys):
    code, out, _ = run_cli(capsys, "nimber", "CS[1,1,1,1]+CS[0,1,0,1]", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["nimber"] == 0
    assert report["winner"] == "second"


def test_nimber_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "nimber", "CS[1,2")
    assert code == 2
    assert "offset" in err


def test_verify_formula_passes(capsys):
    code, out, err = run_cli(capsys, "verify-formula", "--max-q", "6")
    assert code == 0
    assert "PASS" in out
    assert "mismatches: 0" in out
    assert "wall time" in err  # timing stays off stdout


def test_verify_formula_json_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "verify-formula", "--max-q", "5", "--json")
    code2, out2, _ = run_cli(capsys, "verify-formula", "--max-q", "5", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    report = json.loads(out1)
    assert report["pass"] is True
    assert len(report["cells"]) == 21


def test_verify_formula_cache_roundtrip(tmp_path, capsys):
    cache = tmp_path / "memo.json"
    code, _, _ = run_cli(capsys, "verify-formula", "--max-q", "4", "--cache", str(cache))
    assert code == 0 and cache.exists()
    payload = json.loads(cache.read_text())
    assert payload["format"] == "sproutgames-grundy-cache-v1"
    # a second run reuses the cache and reports the same result
    code, out, _ = run_cli(capsys, "verify-formula", "--max-q", "4", "--cache", str(cache))
    assert code == 0 and "PASS" in out


def test_playout_command(capsys):
    code, out, _ = run_cli(capsys, "playout", "--tips", "3", "--trials", "10", "--seed", "1")
    assert code == 0
    assert "2: 10" in out  # every playout of one 3-tip spot takes 2 moves
    assert "PASS" in out


def test_playout_json_records(capsys):
    code, out, _ = run_cli(
        capsys, "playout", "--tips", "4,4", "--trials", "3", "--seed", "5", "--json"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4  # one record per trial plus the summary
    for line in lines[:3]:
        record = json.loads(line)
        assert record["move_count"] == 8 and record["euler_ok"]
    summary = json.loads(lines[3])
    assert summary["pass"] is True and summary["euler_ok_rate"] == 1.0


def test_formulas_command_examples(capsys):
    code, out, _ = run_cli(capsys, "formulas", "--orientable", "-n", "2", "-t", "4,4", "-k", "1")
    assert code == 0 and "{8,10}" in out
    code, out, _ = run_cli(capsys, "formulas", "--nonorientable", "-n", "2", "-t", "4,4", "-k", "2")
    assert code == 0 and "{8,9,10}" in out
    code, out, _ = run_cli(capsys, "formulas", "--bounds-p4", "-n", "2", "-t", "3,3")
    assert code == 0 and "(6, 6)" in out


def test_formulas_hypothesis_violation(capsys):
    code, _, err = run_cli(capsys, "formulas", "--bounds-p4", "-t", "3,2")
    assert code == 2
    assert "at least 3 tips" in err


def test_formulas_spot_count_mismatch(capsys):
    with pytest.raises(SystemExit):
        main(["formulas", "--forest", "-n", "3", "-t", "4,4"])
