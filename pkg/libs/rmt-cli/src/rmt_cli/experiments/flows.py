from __future__ import annotations

import typing as t

from rmt_cli.config import flow_config_from_section
from rmt_lab.density import classical_locations
from rmt_lab.dynamics import rigidity_q, run_flow
from rmt_lab.ensembles import sample, spectrum
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.statistics import default_window, gap_statistics, ks_distance
from rmt_lab.utils import derive_seed

from .common import bulk_center, reference_spec, sample_points, singular_value_law

import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["dbm_relax_seed", "summarize_dbm_relax"]

## Spawn keys for the streams derived from a row seed
FLOW_STREAM: int = 1
REFERENCE_STREAM: int = 2


def _sample_times(config: "ExperimentConfig", horizon: float) -> list[float]:
    times = config.flow.get("sample_times")
    if times:
        return [float(v) for v in times]
    if horizon == 0:
        return [0.0]

    return [0.0, horizon / 4.0, horizon / 2.0, horizon]


def dbm_relax_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """Run the eigenvalue flow from one sampled spectrum.

    Description:
        Emits long-format rows `(seed, time, quantity, value)`: the rigidity sum at each
        sample time, the rescaled bulk gaps at each sample time, and the gaps of a fresh
        Gaussian-entry sample of the same class (quantity `reference_gap`).

    """
    spec = config.ensemble_spec(seed=seed)
    model = singular_value_law(spec)
    gamma = classical_locations(model, spec.n)

    flow = flow_config_from_section(
        config.flow,
        beta=spec.beta,
        gamma=gamma,
        d=spec.d,
        seed=derive_seed(seed, FLOW_STREAM),
    )
    if spec.kind.is_covariance != flow.is_covariance:
        raise ConfigurationError(
            f"dbm-relax: drift '{flow.effective_drift.value}' does not match ensemble '{spec.kind.value}'"
        )

    trajectory = run_flow(spectrum(sample(spec)), flow, _sample_times(config, flow.horizon))
    q = rigidity_q(trajectory, gamma)

    e = float(config.stat("e", bulk_center(model)))
    ell = float(config.stat("ell", default_window(spec.n, config.stat("delta", 0.1))))
    rows: list[dict] = []

    for k, time in enumerate(trajectory.times):
        rows.append({"seed": seed, "time": float(time), "quantity": "rigidity_q", "value": float(q[k])})
        stats = gap_statistics(trajectory.points(k), model, e, ell)
        rows.extend(
            {"seed": seed, "time": float(time), "quantity": "gap", "value": float(g)}
            for g in stats.rescaled_gaps
        )

    reference = sample_points(reference_spec(spec, derive_seed(seed, REFERENCE_STREAM)))
    ref_stats = gap_statistics(reference, model, e, ell)
    rows.extend(
        {"seed": seed, "time": 0.0, "quantity": "reference_gap", "value": float(g)}
        for g in ref_stats.rescaled_gaps
    )

    return rows


def summarize_dbm_relax(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    reference = frame.loc[frame["quantity"] == "reference_gap", "value"].to_numpy()
    gaps = frame[frame["quantity"] == "gap"]
    rigidity = frame[frame["quantity"] == "rigidity_q"]

    ks_by_time = {
        f"{time:g}": ks_distance(group["value"].to_numpy(), reference)
        for time, group in gaps.groupby("time")
    }
    ks_values = list(ks_by_time.values())

    return {
        "ks_by_time": ks_by_time,
        "ks_final": ks_values[-1] if ks_values else None,
        "ks_non_increasing": bool(np.all(np.diff(ks_values) <= 0)) if ks_values else None,
        "rigidity_by_time": {
            f"{time:g}": float(group["value"].mean()) for time, group in rigidity.groupby("time")
        },
        "reference_gaps": int(reference.size),
    }
