from __future__ import annotations

from pathlib import Path
import typing as t

from rmt_cli.config import config_from_dict
from rmt_cli.constants import EXIT_OK, EXIT_USAGE
from rmt_cli.main import cli
from rmt_cli.runner import run_experiment
from rmt_lab.io import load_csv, load_json

from .fixtures import EXPERIMENTS_DIR, semicircle_doc, semicircle_file, write_doc

import pytest

__all__ = [
    "test_cli_unknown_experiment",
    "test_cli_validate",
    "test_cli_validate_reports_schema_error",
    "test_cli_run_writes_artifacts",
    "test_run_is_independent_of_workers",
    "test_deterministic_experiment_ignores_seeds",
]


def test_cli_unknown_experiment(capsys: pytest.CaptureFixture):
    code = cli(["nope"])

    assert code == EXIT_USAGE
    err = capsys.readouterr().err
    assert err.strip() == "error: unknown experiment 'nope'"


def test_cli_validate(capsys: pytest.CaptureFixture, semicircle_file: Path):
    code = cli(["validate", str(semicircle_file)])

    assert code == EXIT_OK
    assert capsys.readouterr().out.strip() == f"ok: {semicircle_file} (semicircle, 4 seed(s))"
    ## validate never touches the output dir
    assert not (semicircle_file.parent / "out").exists()

    assert cli(["validate", str(EXPERIMENTS_DIR / "dbm-relax.json")]) == EXIT_OK


def test_cli_validate_reports_schema_error(capsys: pytest.CaptureFixture, tmp_path: Path):
    path = write_doc(
        tmp_path / "bad.json",
        {"experiment": "mp-law", "ensemble": {"kind": "covariance-real", "n": 10, "d": 1.5}},
    )

    assert cli(["validate", str(path)]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert err.startswith("error: ensemble: dimension ratio d=1.5 violates 0<d<1")
    assert err.count("\n") == 1


def test_cli_run_writes_artifacts(capsys: pytest.CaptureFixture, semicircle_file: Path):
    code = cli(["semicircle", "--config", str(semicircle_file)])

    assert code == EXIT_OK
    out_dir = semicircle_file.parent / "out"
    assert "semicircle: wrote 8 row(s)" in capsys.readouterr().out

    results = out_dir / "results.csv"
    assert results.read_bytes().count(b"\r\n") == 9

    frame = load_csv(results)
    assert sorted(frame["n"].unique().tolist()) == [50, 100]
    assert (frame["ks"] < 0.2).all()

    summary = load_json(out_dir / "summary.json")
    assert summary["schema"] == 1
    assert summary["experiment"] == "semicircle"
    assert summary["rows"] == 8
    assert [s["index"] for s in summary["seeds"]] == [0, 1, 2, 3]
    assert set(summary["metrics"]) >= {"ks_mean", "ks_max", "ks_mean_by_n", "samples"}
    assert summary["config"]["ensemble"]["n"] == [50, 100]

    assert (out_dir / "meta.log").is_file()
    assert "Running 'semicircle'" in (out_dir / "meta.log").read_text()


def test_run_is_independent_of_workers(tmp_path: Path, semicircle_doc: dict[str, t.Any]):
    outputs = {}
    for workers in (1, 2):
        doc = {**semicircle_doc, "workers": workers, "output_dir": str(tmp_path / f"w{workers}")}
        result = run_experiment(config_from_dict(doc))
        outputs[workers] = result

    assert outputs[1].results_file.read_bytes() == outputs[2].results_file.read_bytes()
    assert outputs[1].metrics == outputs[2].metrics


def test_deterministic_experiment_ignores_seeds(tmp_path: Path):
    base = {
        "experiment": "reverse-flow",
        "relaxation": {"grid_points": 2048, "times": [0.02, 0.04], "orders": [1, 2]},
    }
    first = run_experiment(
        config_from_dict({**base, "seeds": {"count": 1, "base": 1}, "output_dir": str(tmp_path / "a")})
    )
    second = run_experiment(
        config_from_dict({**base, "seeds": {"count": 3, "base": 1}, "output_dir": str(tmp_path / "b")})
    )

    assert first.results_file.read_bytes() == second.results_file.read_bytes()
    frame = load_csv(first.results_file)
    assert sorted(frame["order"].unique().tolist()) == [1, 2]
