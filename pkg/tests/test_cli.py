"""Command line interface and CSV sweep contract."""

import csv
import math
import subprocess
import sys

import pytest

from fracbinom import NeoParams, residual_R
from fracbinom.cli import (
    CSV_COLUMNS,
    SweepGrid,
    main,
    parse_float_axis,
    parse_int_axis,
    run_sweep,
)


def test_csv_columns_contract():
    assert CSV_COLUMNS == (
        "alpha",
        "n",
        "lambda",
        "gamma",
        "mode",
        "lhs",
        "rhs",
        "residual_R",
        "abs_err",
        "rel_err",
        "tol",
        "status",
    )


def _small_grid(**overrides):
    kwargs = dict(
        alpha_values=[0.5, 1.5],
        n_values=[1, 2],
        lambda_values=[0.5, 1.0],
        tol=1e-8,
        mode="neo3",
    )
    kwargs.update(overrides)
    return SweepGrid(**kwargs)


def test_sweep_csv_shape_and_order(tmp_path):
    out = tmp_path / "grid.csv"
    summary = run_sweep(_small_grid(), output_path=str(out))
    assert summary.total == 8
    assert summary.failed == 0
    assert summary.passed == 8
    assert summary.worst_rel_err <= 1e-8

    with out.open(newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == list(CSV_COLUMNS)
    assert len(rows) == 1 + 8
    # row order: alpha outer, n middle, lambda inner
    key = [(float(r[0]), int(r[1]), float(r[2])) for r in rows[1:]]
    assert key == sorted(key)
    body = rows[1]
    assert body[4] == "neo3"
    assert body[11] == "pass"
    # residual column carries the quadrature residual for neo3 rows; the
    # sweep's internal quad_tol is scaled from the row tol, so compare loosely
    r = residual_R(NeoParams(0.5, 1, 0.5))
    assert float(body[7]) == pytest.approx(r, abs=1e-8)
    # numbers are emitted in round-trippable %.17g form
    assert float(body[5]) == pytest.approx(float(body[6]), rel=1e-8)


def test_sweep_reruns_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_sweep(_small_grid(), output_path=str(a))
    run_sweep(_small_grid(), output_path=str(b))
    assert a.read_bytes() == b.read_bytes()


def test_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "serial.csv", tmp_path / "par.csv"
    grid = _small_grid(alpha_values=[0.3, 0.7, 1.1, 1.9], n_values=[1, 2, 3])
    run_sweep(grid, output_path=str(a), parallel=1)
    run_sweep(grid, output_path=str(b), parallel=3)
    assert a.read_bytes() == b.read_bytes()


def test_sweep_grid_validation():
    with pytest.raises(ValueError):
        _small_grid(alpha_values=[])
    with pytest.raises(ValueError):
        _small_grid(n_values=[0])
    with pytest.raises(ValueError):
        _small_grid(lambda_values=[1.5])
    with pytest.raises(ValueError):
        _small_grid(mode="nonsense")
    with pytest.raises(ValueError):
        _small_grid(tol=0.0)


def test_axis_parsers():
    assert parse_float_axis("0.25") == [0.25]
    assert parse_float_axis("0.1,0.5,1.0") == [0.1, 0.5, 1.0]
    assert parse_float_axis("0.1:0.4:0.1") == [0.1, 0.2, 0.3, 0.4]
    assert parse_float_axis("0.5,0.7:0.9:0.1") == [0.5, 0.7, 0.8, 0.9]
    assert parse_int_axis("3") == [3]
    assert parse_int_axis("1:4:1") == [1, 2, 3, 4]
    assert parse_int_axis("2,5,9") == [2, 5, 9]
    with pytest.raises(ValueError):
        parse_float_axis("0.5:0.1:0.1")
    with pytest.raises(ValueError):
        parse_float_axis("abc")
    with pytest.raises(ValueError):
        parse_int_axis("1.5")


def test_verify_command(capsys):
    rc = main(["verify", "--mode", "neo3", "--alpha", "0.5", "--n", "2", "--lambda", "1.0"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pass" in out


def test_verify_command_failure_exit(capsys):
    # alpha = 2.5 is outside the neo3 domain: the row errors and rc is 1
    rc = main(["verify", "--mode", "neo3", "--alpha", "2.5", "--n", "1", "--lambda", "0.5"])
    assert rc == 1
    assert "error" in capsys.readouterr().out


def test_sweep_command_stdout(capsys):
    rc = main(
        [
            "sweep",
            "--mode",
            "neo3A",
            "--alpha",
            "2,2.5,3",
            "--n",
            "1",
            "--lambda",
            "0.5,1.0",
            "--tol",
            "1e-7",
        ]
    )
    captured = capsys.readouterr()
    assert rc == 0
    lines = [ln for ln in captured.out.splitlines() if ln]
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 1 + 6
    assert "passed=6 failed=0" in captured.err


def test_sweep_command_bad_axis(capsys):
    rc = main(["sweep", "--alpha", "abc", "--n", "1", "--lambda", "0.5"])
    assert rc == 2
    assert captured_err_nonempty(capsys)


def captured_err_nonempty(capsys):
    return bool(capsys.readouterr().err.strip())


def test_unknown_mode_is_argparse_error():
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--mode", "nonsense", "--alpha", "0.5"])
    assert exc.value.code == 2


def test_inequality_mode_rows(tmp_path):
    out = tmp_path / "ineq.csv"
    grid = SweepGrid(
        alpha_values=[0.5, 1.0, 1.5],
        n_values=[2],
        lambda_values=[1.0],
        mode="inequality",
    )
    summary = run_sweep(grid, output_path=str(out))
    assert summary.failed == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    status = {float(r["alpha"]): r["status"] for r in rows}
    assert status[0.5] == "strict_less"
    assert status[1.0] == "equal"
    assert status[1.5] == "strict_greater"
    # the margin column holds rhs - lhs, negative above alpha = 1
    margins = {float(r["alpha"]): float(r["residual_R"]) for r in rows}
    assert margins[0.5] > 0 > margins[1.5]


def test_r_scan_mode_rows(tmp_path):
    out = tmp_path / "scan.csv"
    grid = SweepGrid(
        alpha_values=[1.5],
        n_values=[1, 2, 3, 4],
        lambda_values=[0.5],
        mode="r_scan",
    )
    summary = run_sweep(grid, output_path=str(out))
    assert summary.failed == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    # each row compares |R_n| (lhs) against |R_{n-1}| (rhs)
    for r in rows[1:]:
        assert abs(float(r["lhs"])) < abs(float(r["rhs"]))
    r2 = float(rows[1]["lhs"])
    assert r2 == pytest.approx(residual_R(NeoParams(1.5, 2, 0.5)), rel=1e-10)


def test_taylor_mode_rows(tmp_path):
    out = tmp_path / "taylor.csv"
    for function_name in ("binom", "exp"):
        grid = SweepGrid(
            alpha_values=[0.7],
            n_values=[1],
            lambda_values=[0.5],
            mode="taylor_t1",
            tol=1e-7,
            function_name=function_name,
        )
        summary = run_sweep(grid, output_path=str(out))
        assert summary.failed == 0, function_name


def test_osler_command(capsys):
    rc = main(["osler", "--alpha", "0.5", "--n", "1"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "pass" in out


def test_binom_table_command(capsys):
    rc = main(["binom", "--alpha", "0.5", "--n", "2"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "1" in out  # j = 0 row carries binom(an, 0) = 1


def test_kalpha_command(capsys):
    rc = main(["kalpha", "--alpha", "2.5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert len([ln for ln in out.splitlines() if ln.strip()]) >= 3


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "fracbinom.cli", "verify", "--alpha", "0.5", "--n", "1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
