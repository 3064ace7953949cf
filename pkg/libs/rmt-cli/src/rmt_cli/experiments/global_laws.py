from __future__ import annotations

from functools import partial
import typing as t

from rmt_lab.density import cdf
from rmt_lab.statistics import ks_distance

from .common import eigenvalue_law, require_covariance, require_wigner, sample_points

import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["semicircle_seed", "mp_law_seed", "summarize_global_law"]


def semicircle_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    rows = []
    for n in config.sizes:
        spec = config.ensemble_spec(n, seed=seed)
        require_wigner(spec, "semicircle")
        points = sample_points(spec)
        model = eigenvalue_law(spec)

        rows.append(
            {
                "seed": seed,
                "n": n,
                "ks": ks_distance(points.values, partial(cdf, model)),
                "min": float(points.values[0]),
                "max": float(points.values[-1]),
            }
        )

    return rows


def mp_law_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """KS distance of the eigenvalues of A*A to the Marchenko-Pastur CDF."""
    rows = []
    for n in config.sizes:
        spec = config.ensemble_spec(n, seed=seed)
        require_covariance(spec, "mp-law")
        eigenvalues = sample_points(spec).squared
        model = eigenvalue_law(spec)

        rows.append(
            {
                "seed": seed,
                "n": n,
                "d": spec.d,
                "ks": ks_distance(eigenvalues, partial(cdf, model)),
                "min": float(eigenvalues[0]),
                "max": float(eigenvalues[-1]),
            }
        )

    return rows


def summarize_global_law(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    by_n = frame.groupby("n")["ks"].mean()

    return {
        "ks_mean": float(frame["ks"].mean()),
        "ks_max": float(frame["ks"].max()),
        "ks_mean_by_n": {str(int(n)): float(v) for n, v in by_n.items()},
        "samples": int(len(frame)),
    }
