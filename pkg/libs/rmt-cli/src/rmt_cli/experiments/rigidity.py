from __future__ import annotations

import typing as t

from rmt_lab.density import classical_locations

from .common import sample_points, singular_value_law

import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["rigidity_seed", "reduce_rigidity", "summarize_rigidity"]


def rigidity_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """sum_j (x_j - gamma_j)^2 against the classical locations, one row per size."""
    rows = []
    for n in config.sizes:
        spec = config.ensemble_spec(n, seed=seed)
        points = sample_points(spec)
        gamma = classical_locations(singular_value_law(spec), n)
        q = float(np.sum((points.values - gamma) ** 2))

        rows.append({"seed": seed, "n": n, "q": q})

    return rows


def reduce_rigidity(frame: pd.DataFrame, config: "ExperimentConfig") -> pd.DataFrame:
    grouped = frame.groupby("n")["q"]
    out = pd.DataFrame(
        {
            "n": grouped.mean().index.astype(int),
            "q_hat": grouped.mean().to_numpy(),
            "q_stderr": (grouped.std(ddof=1) / np.sqrt(grouped.count())).fillna(0.0).to_numpy(),
            "samples": grouped.count().to_numpy(),
        }
    )
    out["q_hat_over_n"] = out["q_hat"] / out["n"]
    out.insert(0, "seed", config.seeds.base)

    return out


def summarize_rigidity(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    metrics: dict[str, t.Any] = {
        "q_hat_over_n": {str(int(n)): float(v) for n, v in zip(frame["n"], frame["q_hat_over_n"])},
    }
    if len(frame) > 1:
        slope = np.polyfit(np.log(frame["n"]), np.log(frame["q_hat_over_n"]), 1)[0]
        metrics["fitted_slope"] = float(slope)

    return metrics
