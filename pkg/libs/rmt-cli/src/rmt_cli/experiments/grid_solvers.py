from __future__ import annotations

import typing as t

from rmt_lab.relaxation1d import (
    EntropyCurve,
    GapFlowConfig,
    GridDensity,
    fit_decay_rate,
    fokker_planck_gap,
    gap_model,
    lsi_ratio,
    moment_matched_family,
    reverse_flow_errors,
)
from rmt_lab.utils import derive_rng

from .common import finite

from loguru import logger as log
import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = [
    "reverse_flow_run",
    "summarize_reverse_flow",
    "entropy_decay_run",
    "summarize_entropy_decay",
]

DEFAULT_ORDERS: tuple[int, ...] = (1, 2, 3)
DEFAULT_REVERSE_TIMES: tuple[float, ...] = (0.02, 0.04, 0.08)
DEFAULT_EPSILON: float = 0.5
## A fitted slope passes when it is at least K - SLOPE_SLACK
SLOPE_SLACK: float = 0.2

DEFAULT_RADII: tuple[float, ...] = (0.5, 0.25)
DEFAULT_T_MAX: float = 6.0
DEFAULT_RECORD_STEP: float = 0.05
LSI_TRIALS: int = 50
## S <= LSI_BOUND * R^2 * D(sqrt q) for the relaxation flow with beta >= 1
LSI_BOUND: float = 4.0
## dS/dt = -DISSIPATION_FACTOR * D(sqrt q_t)
DISSIPATION_FACTOR: float = 4.0
## Finite-difference dS/dt <= -(1 - DISSIPATION_SLACK) D(sqrt q_t) at every recorded step
DISSIPATION_SLACK: float = 0.05
DISSIPATION_ATOL: float = 1e-10


def _reference_density(config: "ExperimentConfig") -> GridDensity:
    epsilon = float(config.relax("epsilon", DEFAULT_EPSILON))
    kwargs: dict[str, t.Any] = {}
    if config.relax("half_width") is not None:
        kwargs["half_width"] = float(config.relax("half_width"))
    if config.relax("grid_points") is not None:
        kwargs["n_points"] = int(config.relax("grid_points"))

    return GridDensity.from_function(moment_matched_family(epsilon), beta=1.0, **kwargs)


def reverse_flow_run(config: "ExperimentConfig") -> list[dict]:
    """L1(gamma) error of exp(tB) g_t against u for every order K and time t."""
    u = _reference_density(config)
    times = [float(s) for s in config.relax("times", DEFAULT_REVERSE_TIMES)]
    frames = [
        reverse_flow_errors(u, times, int(order)).to_frame()
        for order in config.relax("orders", DEFAULT_ORDERS)
    ]
    frame = pd.concat(frames, ignore_index=True)
    frame.insert(0, "seed", config.seeds.base)

    return frame.to_dict(orient="records")


def summarize_reverse_flow(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    slopes: dict[str, float] = {}
    passes: dict[str, bool] = {}

    for order, group in frame.groupby("order", sort=True):
        group = group.sort_values("t")
        slope = float(np.polyfit(np.log(group["t"]), np.log(group["l1_error"]), 1)[0])
        slopes[str(order)] = slope
        passes[str(order)] = bool(slope >= int(order) - SLOPE_SLACK)

    return {
        "epsilon": float(config.relax("epsilon", DEFAULT_EPSILON)),
        "slopes": slopes,
        "passes": passes,
        "all_pass": all(passes.values()),
    }


def _gap_config(config: "ExperimentConfig", r: float) -> GapFlowConfig:
    kwargs = {
        key: config.relax(key)
        for key in ("g", "u_max", "n_cells", "dt")
        if config.relax(key) is not None
    }

    return GapFlowConfig(beta=float(config.relax("beta", 1.0)), r=float(r), **kwargs)


def _record_times(config: "ExperimentConfig") -> np.ndarray:
    t_max = float(config.relax("t_max", DEFAULT_T_MAX))
    step = float(config.relax("record_step", DEFAULT_RECORD_STEP))

    return np.linspace(0.0, t_max, int(round(t_max / step)) + 1)


def entropy_decay_run(config: "ExperimentConfig") -> list[dict]:
    """Relative entropy and Dirichlet form of the gap flow for every radius R."""
    times = _record_times(config)
    rows: list[dict] = []

    for r in config.relax("radii", DEFAULT_RADII):
        curve = fokker_planck_gap(_gap_config(config, r), None, times)
        rows.extend(
            {
                "seed": config.seeds.base,
                "r": float(r),
                "t": float(s),
                "S": float(e),
                "D": float(d),
                "mass_error": float(m),
            }
            for s, e, d, m in zip(curve.times, curve.entropy, curve.dirichlet, curve.mass_error)
        )

    return rows


def _decay_rate(group: pd.DataFrame) -> float | None:
    curve = EntropyCurve(
        times=group["t"].to_numpy(),
        entropy=group["S"].to_numpy(),
        dirichlet=group["D"].to_numpy(),
        mass_error=group["mass_error"].to_numpy(),
    )
    try:
        return fit_decay_rate(curve)
    except ValueError as exc:
        log.warning(f"No decay rate: {exc}")
        return None


def _dissipation_error(group: pd.DataFrame) -> float | None:
    """Median relative mismatch between -dS/dt and 4 D along the recorded curve."""
    s = group["S"].to_numpy()
    d = group["D"].to_numpy()
    times = group["t"].to_numpy()
    slope = -np.diff(s) / np.diff(times)
    predicted = DISSIPATION_FACTOR * 0.5 * (d[1:] + d[:-1])
    keep = s[1:] > 1e-8
    if not np.any(keep):
        return None

    return float(np.median(np.abs(slope[keep] - predicted[keep]) / predicted[keep]))


def _dissipation_holds(group: pd.DataFrame) -> bool:
    """Backward-difference dS/dt <= -(1 - 0.05) D at every recorded time after t=0."""
    s = group["S"].to_numpy()
    d = group["D"].to_numpy()
    times = group["t"].to_numpy()
    if s.size < 2:
        return True

    slope = np.diff(s) / np.diff(times)
    bound = -(1.0 - DISSIPATION_SLACK) * d[1:]

    return bool(np.all(slope <= bound + DISSIPATION_ATOL))


def _lsi_constant(config: "ExperimentConfig", r: float) -> float:
    """Largest S(q) / (R^2 D(sqrt q)) over random smooth relative densities q."""
    model = gap_model(_gap_config(config, r))
    rng = derive_rng(config.seeds.base)
    u = model.centers
    worst = 0.0

    for _ in range(int(config.relax("lsi_trials", LSI_TRIALS))):
        centers = model.config.g + rng.normal(0.0, 2.0 * r, size=3)
        widths = r * rng.uniform(0.25, 1.5, size=3)
        heights = rng.uniform(-1.0, 1.0, size=3)
        log_q = sum(h * np.exp(-((u - c) ** 2) / (2.0 * w**2)) for c, w, h in zip(centers, widths, heights))
        worst = max(worst, lsi_ratio(model, np.exp(log_q)))

    return worst


def summarize_entropy_decay(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    rates: dict[str, float | None] = {}
    monotone: dict[str, bool] = {}
    dissipation: dict[str, float | None] = {}
    dissipation_ok: dict[str, bool] = {}
    lsi: dict[str, float] = {}

    for r, group in frame.groupby("r", sort=False):
        group = group.sort_values("t")
        key = f"{r:g}"
        rates[key] = _decay_rate(group)
        monotone[key] = bool(np.all(np.diff(group["S"].to_numpy()) <= 1e-9))
        dissipation[key] = _dissipation_error(group)
        dissipation_ok[key] = _dissipation_holds(group)
        lsi[key] = _lsi_constant(config, float(r))

    radii = [float(r) for r in frame["r"].unique()]
    metrics: dict[str, t.Any] = {
        "beta": float(config.relax("beta", 1.0)),
        "rates": rates,
        "rate_times_r2": {
            f"{r:g}": finite(rates[f"{r:g}"] * r * r) if rates[f"{r:g}"] is not None else None
            for r in radii
        },
        "monotone": monotone,
        "max_mass_error": float(frame["mass_error"].max()),
        "dissipation_rel_error": dissipation,
        "dissipation_holds": bool(all(dissipation_ok.values())),
        "lsi_constant": lsi,
        "lsi_bound_holds": bool(all(v <= LSI_BOUND for v in lsi.values())),
    }

    if len(radii) >= 2 and all(rates[f"{r:g}"] for r in radii[:2]):
        small, large = sorted(radii[:2])
        metrics["rate_ratio"] = rates[f"{small:g}"] / rates[f"{large:g}"]
        metrics["expected_ratio"] = (large / small) ** 2

    return metrics
