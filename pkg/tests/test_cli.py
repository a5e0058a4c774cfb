from __future__ import annotations

import json
import subprocess
import sys

import pytest

from pow2sums import CLAIMS, Claim, Verdict, canonical_json
from pow2sums.cli import main


def run_json(capsys, *argv: str) -> dict:
    code = main(list(argv))
    out = capsys.readouterr().out
    assert code == 0, out
    parsed = json.loads(out)
    # single-query outputs are canonical JSON and round-trip byte-identically
    assert canonical_json(parsed) == out.strip()
    return parsed


def test_order_command(capsys):
    record = run_json(capsys, "order", "--g", "3", "--n", "5")
    assert record == {"g": 3, "n": 5, "omega": 8, "path": "fast"}


def test_order_command_naive_path(capsys):
    record = run_json(capsys, "order", "--g", "3", "--n", "5", "--naive")
    assert record["omega"] == 8
    assert record["path"] == "naive"


def test_order_table_command(capsys):
    record = run_json(capsys, "order-table", "--g", "7", "--n-max", "5")
    assert record == {"g": 7, "n_max": 5, "omegas": [1, 2, 2, 2, 4]}


def test_valuation_command(capsys):
    record = run_json(capsys, "valuation", "--w", "-40")
    assert record == {"w": -40, "valuation": 3, "odd_part": -5}


def test_c_command(capsys):
    record = run_json(capsys, "c", "--g", "9")
    assert record == {"g": 9, "c": 5}


def test_c_command_accepts_negative_bases(capsys):
    record = run_json(capsys, "c", "--g", "-3")
    assert record["c"] == 3


def test_half_order_command(capsys):
    record = run_json(capsys, "half-order", "--g", "7", "--n", "4")
    assert record == {
        "g": 7,
        "n": 4,
        "half_exponent": 1,
        "residue": 7,
        "involution": "HALF_MINUS_ONE",
        "matches_expected": False,
    }


def test_expsum_command(capsys):
    record = run_json(capsys, "expsum", "--g", "3", "--w", "1", "--n", "4")
    assert record["is_zero"] is True
    assert record["terms"] == 4
    assert record["pairing"] == [[1, 1], [3, 1]]
    assert record["violating_residue"] is None
    re, im = record["float_sum"]
    assert abs(complex(re, im)) < 1e-12


def test_expsum_command_nonzero_case(capsys):
    record = run_json(capsys, "expsum", "--g", "3", "--w", "1", "--n", "3")
    assert record["is_zero"] is False
    assert record["violating_residue"] == 3


def test_expsum_command_beyond_float_cap(capsys):
    # g = 2^52 + 1 is an involution mod 2^53, so the orbit has two terms and
    # pairs antipodally; the float cross-check is skipped above the cap
    g = str((1 << 52) + 1)
    record = run_json(capsys, "expsum", "--g", g, "--w", "1", "--n", "53")
    assert record["terms"] == 2
    assert record["is_zero"] is True
    assert record["float_sum"] is None


def test_min_vanishing_command(capsys):
    record = run_json(capsys, "min-vanishing-n", "--g", "3", "--w", "1", "--n-max", "10")
    assert record == {
        "g": 3,
        "w": 1,
        "n_max": 10,
        "bound": 4,
        "found": True,
        "n": 2,
        "slack": 2,
    }


def test_min_vanishing_command_absent(capsys):
    record = run_json(capsys, "min-vanishing-n", "--g", "3", "--w", "16", "--n-max", "3")
    assert record["found"] is False
    assert record["n"] is None


def test_table_format(capsys):
    assert main(["order", "--g", "3", "--n", "5", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "omega" in out and "8" in out


def test_csv_format_single_query(capsys):
    assert main(["order", "--g", "3", "--n", "5", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "g,n,omega,path"
    assert lines[1] == "3,5,8,fast"


def test_domain_error_exits_2(capsys):
    assert main(["c", "--g", "1"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["order", "--g", "4", "--n", "3"]) == 2
    assert main(["expsum", "--g", "3", "--w", "0", "--n", "4"]) == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["sweep", "--claim", "bogus", "--g-min", "1", "--g-max", "3", "--n-min", "1", "--n-max", "2"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_sweep_range_usage_error_exits_2(capsys):
    code = main(
        ["sweep", "--claim", "lemma1", "--g-min", "9", "--g-max", "3", "--n-min", "1", "--n-max", "2"]
    )
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_sweep_command_passing(capsys):
    code = main(
        ["sweep", "--claim", "lemma1", "--g-min", "3", "--g-max", "61", "--n-min", "3", "--n-max", "10"]
    )
    out = capsys.readouterr().out
    assert code == 0
    parsed = json.loads(out)
    assert parsed["tallies"]["counterexample"] == 0
    assert canonical_json(parsed) == out.strip()


def test_sweep_strict_paper_flag(capsys):
    argv = ["sweep", "--claim", "lemma4_theorem5", "--g-min", "1", "--g-max", "255",
            "--n-min", "3", "--n-max", "8"]
    assert main(argv) == 0
    capsys.readouterr()
    assert main(argv + ["--strict-paper"]) == 1
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["tallies"]["paper_exception"] == 6


def test_sweep_injected_counterexample_exits_1(capsys):
    claim = Claim(
        name="test_only_failure",
        needs_w=False,
        evaluate=lambda g, n, w: Verdict.COUNTEREXAMPLE,
        detail=lambda g, n, w: ("forced failure", "forced success"),
    )
    CLAIMS[claim.name] = claim
    try:
        code = main(
            ["sweep", "--claim", "test_only_failure",
             "--g-min", "1", "--g-max", "3", "--n-min", "2", "--n-max", "2"]
        )
        assert code == 1
        parsed = json.loads(capsys.readouterr().out)
        assert parsed["tallies"]["counterexample"] == 2
    finally:
        del CLAIMS["test_only_failure"]


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "pow2sums", "order", "--g", "3", "--n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["omega"] == 8


def test_module_entry_point_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "pow2sums", "order", "--g", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
