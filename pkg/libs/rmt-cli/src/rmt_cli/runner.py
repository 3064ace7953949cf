from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
import multiprocessing
from pathlib import Path
import subprocess
import typing as t

from rmt_cli.config import ExperimentConfig
from rmt_cli.experiments import Experiment, get_experiment
from rmt_lab import __version__ as rmt_lab_version
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.io import save_csv, save_json
from rmt_lab.settings import SETTINGS
from rmt_lab.setup import add_run_log_sink, remove_run_log_sink

from .classes import RunResult
from .constants import META_LOG_FILE, RESULTS_FILE, SCHEMA_VERSION, SUMMARY_FILE

from loguru import logger as log
import numpy as np
import pandas as pd

__all__ = ["resolve_workers", "git_describe", "collect_rows", "run_experiment"]

SeedTask = tuple[ExperimentConfig, int, int]


def resolve_workers(config: ExperimentConfig) -> int:
    """Worker count: `RMT_LAB_WORKERS` when set, else the document's `workers`.

    Raises:
        ConfigurationError: The environment override is not a positive integer.

    """
    override = SETTINGS.get("WORKERS")
    if override is None:
        return config.workers

    try:
        workers = int(override)
    except (TypeError, ValueError):
        workers = 0
    if workers < 1 or str(override).strip() != str(workers):
        raise ConfigurationError(f"env: RMT_LAB_WORKERS must be a positive integer, got {override!r}")

    log.debug(f"RMT_LAB_WORKERS={workers} overrides workers={config.workers}")

    return workers


def git_describe() -> str:
    """`git describe` of the source tree, or 'unknown' outside a checkout."""
    try:
        proc = subprocess.run(
            ["git", "describe", "--always", "--dirty", "--tags"],
            cwd=Path(__file__).parent,
            capture_output=True,
            text=True,
            timeout=10,
        )
    except (OSError, subprocess.SubprocessError) as exc:
        log.debug(f"git describe failed: {exc}")

        return "unknown"

    return proc.stdout.strip() if proc.returncode == 0 and proc.stdout.strip() else "unknown"


def _run_seed(task: SeedTask) -> tuple[int, list[dict[str, t.Any]]]:
    """Pool entry point: rows of one seed, tagged with its canonical index."""
    config, index, seed = task
    experiment = get_experiment(config.experiment)
    log.debug(f"{config.experiment}: seed #{index} ({seed})")

    return index, experiment.per_seed(config, seed)


def collect_rows(experiment: Experiment, config: ExperimentConfig, workers: int) -> pd.DataFrame:
    """Run an experiment and merge its rows in canonical seed order.

    Description:
        Per-seed experiments fan out over a process pool when `workers > 1`; the merge is
        sorted by seed index, so the frame does not depend on the worker count.

    """
    if not experiment.is_per_seed:
        return pd.DataFrame.from_records(experiment.deterministic(config))

    tasks: list[SeedTask] = [(config, k, seed) for k, seed in config.seeds.seeds()]

    if workers > 1 and len(tasks) > 1:
        ctx = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks)), mp_context=ctx) as pool:
            results = list(pool.map(_run_seed, tasks))
    else:
        results = [_run_seed(task) for task in tasks]

    rows: list[dict[str, t.Any]] = []
    for _, seed_rows in sorted(results, key=lambda item: item[0]):
        rows.extend(seed_rows)

    return pd.DataFrame.from_records(rows)


def _to_builtin(value: t.Any) -> t.Any:
    if isinstance(value, dict):
        return {str(k): _to_builtin(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_to_builtin(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_to_builtin(v) for v in value.tolist()]
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, Path):
        return str(value)

    return value


def _prepare_output_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigurationError(f"output: cannot create output_dir {path}: {exc.strerror}") from exc

    return path


def run_experiment(config: ExperimentConfig) -> RunResult:
    """Run `config.experiment` and write results.csv, summary.json and meta.log.

    Raises:
        ConfigurationError: Unwritable output directory or bad worker override.
        NumericError: A seed failed numerically (the error names the seed).

    """
    experiment = get_experiment(config.experiment)
    workers = resolve_workers(config)
    output_dir = _prepare_output_dir(Path(config.output_dir))

    meta_log = output_dir / META_LOG_FILE
    sink_id = add_run_log_sink(meta_log)

    try:
        log.info(
            f"Running '{config.experiment}' with {config.seeds.count} seed(s) "
            f"(base={config.seeds.base}) on {workers} worker(s)"
        )
        log.debug(f"Config: {config.as_dict()}")

        frame = collect_rows(experiment, config, workers)
        if experiment.reduce is not None:
            frame = experiment.reduce(frame, config)

        metrics = _to_builtin(experiment.summarize(frame, config))

        results_file = save_csv(frame, output_dir / RESULTS_FILE)
        summary_file = save_json(
            {
                "schema": SCHEMA_VERSION,
                "experiment": config.experiment,
                "version": rmt_lab_version,
                "git_describe": git_describe(),
                "config": _to_builtin(config.as_dict()),
                "seeds": config.seeds.provenance(),
                "rows": int(len(frame)),
                "metrics": metrics,
            },
            output_dir / SUMMARY_FILE,
        )
        log.info(f"Wrote {len(frame)} row(s) to {results_file}")

    except Exception as exc:
        log.error(f"({type(exc).__name__}) '{config.experiment}' failed. Details: {exc}")

        raise exc

    finally:
        remove_run_log_sink(sink_id)

    return RunResult(
        experiment=config.experiment,
        output_dir=output_dir,
        results_file=results_file,
        summary_file=summary_file,
        meta_log_file=meta_log,
        rows=int(len(frame)),
        metrics=metrics,
    )
