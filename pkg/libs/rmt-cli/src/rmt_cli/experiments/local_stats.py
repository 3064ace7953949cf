from __future__ import annotations

from functools import partial
import typing as t

from rmt_lab.density import rho
from rmt_lab.ensembles import ou_interpolate, sample, spectrum
from rmt_lab.statistics import (
    CorrelationHistogram,
    correlation_grid,
    correlation_histogram,
    counting_tail,
    default_window,
    estimate_from_histogram,
    gap_statistics,
    ks_distance,
    sine_kernel_pair_correlation,
    wigner_surmise_cdf,
)
from rmt_lab.utils import derive_seed

from .common import (
    bulk_center,
    eigenvalue_law,
    finite,
    reference_spec,
    sample_points,
    singular_value_law,
)

import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = [
    "gaps_seed",
    "summarize_gaps",
    "correlations_seed",
    "reduce_correlations",
    "summarize_correlations",
    "counting_tail_seed",
    "reduce_counting_tail",
    "summarize_counting_tail",
]

OU_STREAM: int = 1
REFERENCE_STREAM: int = 2

DEFAULT_ANCHOR_EDGES: tuple[float, ...] = (-1.0, -0.5, 0.0, 0.5, 1.0)
DEFAULT_SEPARATION_EDGES: tuple[float, ...] = tuple(np.round(np.linspace(0.0, 3.0, 31), 10))
DEFAULT_HALF_WINDOW: float = 0.1
DEFAULT_K_GRID: tuple[float, ...] = (0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 6.0)
DEFAULT_EXPECTED_COUNT: float = 10.0


def _points_after_ou(config: "ExperimentConfig", seed: int):
    """Spectrum of one sample, OU-interpolated for time `statistics.tau` when set."""
    spec = config.ensemble_spec(seed=seed)
    matrix = sample(spec)
    tau = float(config.stat("tau", 0.0))
    if tau > 0:
        matrix = ou_interpolate(matrix, tau, derive_seed(seed, OU_STREAM))

    return spec, spectrum(matrix)


def _window(config: "ExperimentConfig", spec) -> tuple[float, float]:
    model = singular_value_law(spec)
    e = float(config.stat("e", bulk_center(model)))
    ell = float(config.stat("ell", default_window(spec.n, config.stat("delta", 0.1))))

    return e, ell


def gaps_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """Rescaled bulk gaps of one (optionally OU-interpolated) sample and of a Gaussian reference."""
    spec, points = _points_after_ou(config, seed)
    model = singular_value_law(spec)
    e, ell = _window(config, spec)

    stats = gap_statistics(points, model, e, ell)
    reference = sample_points(reference_spec(spec, derive_seed(seed, REFERENCE_STREAM)))
    ref_stats = gap_statistics(reference, model, e, ell)

    rows = [{"seed": seed, "source": "sample", "value": float(g)} for g in stats.rescaled_gaps]
    rows.extend({"seed": seed, "source": "reference", "value": float(g)} for g in ref_stats.rescaled_gaps)

    return rows


def summarize_gaps(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    gaps = frame.loc[frame["source"] == "sample", "value"].to_numpy()
    reference = frame.loc[frame["source"] == "reference", "value"].to_numpy()
    spec = config.ensemble_spec()

    metrics: dict[str, t.Any] = {
        "tau": float(config.stat("tau", 0.0)),
        "ks_to_reference": ks_distance(gaps, reference),
        "gaps": int(gaps.size),
        "reference_gaps": int(reference.size),
        "mean_gap": finite(np.mean(gaps)),
    }
    if spec.beta in (1, 2, 4):
        metrics["ks_to_surmise"] = ks_distance(gaps, partial(wigner_surmise_cdf, beta=spec.beta))

    return metrics


def _correlation_setup(config: "ExperimentConfig"):
    spec = config.ensemble_spec()
    order = int(config.stat("order", 2))
    grid = correlation_grid(
        config.stat("anchor_edges", DEFAULT_ANCHOR_EDGES),
        config.stat("separation_edges", DEFAULT_SEPARATION_EDGES),
        order,
    )
    e = float(config.stat("e", bulk_center(singular_value_law(spec))))
    b = float(config.stat("b", DEFAULT_HALF_WINDOW))
    n_anchors = int(config.stat("anchors", 64))

    return spec, order, grid, e, b, n_anchors


def correlations_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """Per-seed integer tuple counts, one row per bin (flattened C order)."""
    spec, order, grid, e, b, n_anchors = _correlation_setup(config)
    _, points = _points_after_ou(config, seed)
    hist = correlation_histogram(
        [points], singular_value_law(spec), order, e, b, grid, n_anchors=n_anchors
    )

    return [
        {"seed": seed, "bin": int(k), "count": int(c)} for k, c in enumerate(hist.counts.reshape(-1))
    ]


def reduce_correlations(frame: pd.DataFrame, config: "ExperimentConfig") -> pd.DataFrame:
    """Merge per-seed counts exactly and normalize them into the correlation estimate."""
    spec, order, grid, e, b, n_anchors = _correlation_setup(config)
    hist = CorrelationHistogram.empty(order, grid, n_anchors=n_anchors, n_points=spec.n)
    shape = hist.counts.shape

    for _, group in frame.groupby("seed", sort=False):
        counts = group.sort_values("bin")["count"].to_numpy(dtype=np.int64).reshape(shape)
        hist = hist.add_sample(counts)

    estimate = estimate_from_histogram(hist, e, b)
    out = estimate.to_frame()
    if order == 2:
        out["sine_kernel"] = sine_kernel_pair_correlation(out["alpha_2"].to_numpy())
    out.insert(0, "seed", config.seeds.base)
    out["low_statistics"] = estimate.low_statistics

    return out


def summarize_correlations(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    _, order, _, e, b, _ = _correlation_setup(config)
    metrics: dict[str, t.Any] = {
        "order": order,
        "e": e,
        "b": b,
        "mean_value": float(frame["value"].mean()),
        "low_statistics": bool(frame["low_statistics"].any()),
    }

    if order == 2:
        profile = frame.groupby("alpha_2")[["value", "sine_kernel"]].mean()
        window = profile[(profile.index >= 0.2) & (profile.index <= 3.0)]
        if not window.empty:
            metrics["max_abs_deviation_from_sine_kernel"] = float(
                np.max(np.abs(window["value"] - window["sine_kernel"]))
            )

    return metrics


def _tail_interval(config: "ExperimentConfig", spec) -> tuple[float, float]:
    model = eigenvalue_law(spec)
    e = float(config.stat("e", bulk_center(model)))
    expected = float(config.stat("expected_count", DEFAULT_EXPECTED_COUNT))
    ## N |I| = expected_count
    width = expected / spec.n

    return e - width / 2.0, e + width / 2.0


def counting_tail_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """Indicators #{x_j in I} >= K N |I| for one sample (covariance spectra are squared)."""
    spec = config.ensemble_spec(seed=seed)
    points = sample_points(spec)
    values = points.squared if spec.kind.is_covariance else points.values
    k_grid = [float(k) for k in config.stat("k_grid", DEFAULT_K_GRID)]
    tail = counting_tail([np.sort(values)], _tail_interval(config, spec), k_grid)

    return [{"seed": seed, "k": k, "exceeds": int(v)} for k, v in zip(k_grid, tail)]


def reduce_counting_tail(frame: pd.DataFrame, config: "ExperimentConfig") -> pd.DataFrame:
    grouped = frame.groupby("k", sort=True)["exceeds"]
    out = pd.DataFrame(
        {
            "k": grouped.mean().index.to_numpy(dtype=float),
            "tail": grouped.mean().to_numpy(),
            "samples": grouped.count().to_numpy(),
        }
    )
    out.insert(0, "seed", config.seeds.base)

    return out


def summarize_counting_tail(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    spec = config.ensemble_spec()
    lo, hi = _tail_interval(config, spec)

    return {
        "interval": [lo, hi],
        "rho_at_center": float(rho(eigenvalue_law(spec), 0.5 * (lo + hi))),
        "tail_by_k": {f"{k:g}": float(v) for k, v in zip(frame["k"], frame["tail"])},
        "non_increasing": bool(np.all(np.diff(frame["tail"].to_numpy()) <= 0)),
    }
