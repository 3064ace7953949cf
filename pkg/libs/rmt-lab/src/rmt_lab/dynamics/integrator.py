from __future__ import annotations

import typing as t

from rmt_lab.ensembles import SpectralPoints
from rmt_lab.enums import SpectrumKind
from rmt_lab.exceptions import StiffnessError
from rmt_lab.gibbs import as_points_array
from rmt_lab.utils import derive_rng, derive_seed

from .classes import FlowConfig, Trajectory
from .constants import GAP_STEP_DIVISOR, MAX_HALVINGS, TIME_TOL
from .drift import drift_vector

from loguru import logger as log
import numpy as np

__all__ = ["step", "run_flow", "run_flow_ensemble", "min_gap"]


def min_gap(x: np.ndarray, positive: bool = False) -> float:
    """Smallest spacing (and, for covariance configurations, the distance of x_1 to 0)."""
    gaps = [np.min(np.diff(x))] if x.size > 1 else []
    if positive:
        gaps.append(x[0])

    return float(min(gaps)) if gaps else np.inf


def _is_admissible(config: FlowConfig, x: np.ndarray) -> bool:
    if not np.all(np.isfinite(x)):
        return False

    return min_gap(x, positive=config.is_covariance) >= config.collision_floor


def _advance(
    config: FlowConfig, x: np.ndarray, dt: float, noise: np.ndarray
) -> tuple[np.ndarray, float]:
    """One Euler-Maruyama step, halving dt until the result stays ordered and gap >= floor.

    Returns:
        (tuple[np.ndarray, float]): New state and the step actually taken.

    Raises:
        StiffnessError: After `MAX_HALVINGS` rejected halvings.

    """
    n = x.size
    drift = drift_vector(config, x)
    h = float(dt)

    for halving in range(MAX_HALVINGS + 1):
        candidate = x + drift * h + noise * np.sqrt(h / n)
        if _is_admissible(config, candidate):
            if halving:
                log.debug(f"Step accepted after {halving} halving(s), dt={h:.3e}")
            return candidate, h
        h /= 2.0

    gap = min_gap(candidate, positive=config.is_covariance)
    raise StiffnessError(
        f"Integrator exhausted {MAX_HALVINGS} step halvings", gap=gap, seed=config.seed
    )


def step(config: FlowConfig, x, dt: float, noise: t.Sequence[float]) -> SpectralPoints:
    """x' = x + drift dt + noise sqrt(dt/N), retried with dt/2 while the result is not admissible.

    Description:
        When halvings occur the returned state sits at time `dt / 2**k`, not `dt`.
        `run_flow()` accounts for that, direct callers get the shorter step.

    Raises:
        StiffnessError: 40 halvings exhausted; carries the offending gap and the seed.
        SingularConfigurationError: The input itself is singular.

    """
    arr = as_points_array(x)
    noise = np.asarray(noise, dtype=float).reshape(-1)
    if noise.size != arr.size:
        raise ValueError(f"Noise has {noise.size} entries, configuration has {arr.size}")
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")

    new, _ = _advance(config, arr, dt, noise)
    kind = SpectrumKind.SINGULAR_VALUES if config.is_covariance else SpectrumKind.EIGENVALUES

    return SpectralPoints(values=new, kind=kind)


def _validate_sample_times(config: FlowConfig, sample_times) -> np.ndarray:
    if config.horizon == 0:
        return np.zeros(1)

    if sample_times is None:
        return np.array([0.0, config.horizon])

    times = np.asarray(sample_times, dtype=float).reshape(-1)
    if times.size == 0:
        raise ValueError("sample_times must not be empty")
    if np.any(np.diff(times) <= 0):
        raise ValueError("sample_times must be strictly increasing")
    if times[0] < 0 or times[-1] > config.horizon * (1 + 1e-12):
        raise ValueError(
            f"sample_times must lie in [0, {config.horizon:g}], got [{times[0]:g}, {times[-1]:g}]"
        )

    return times


def run_flow(initial, config: FlowConfig, sample_times: t.Sequence[float] | None = None) -> Trajectory:
    """Integrate the flow from `initial` and record it at `sample_times`.

    Params:
        initial (SpectralPoints|np.ndarray): Strictly ordered start configuration.
        config (FlowConfig): Flow parameters; `config.seed` drives the Brownian increments.
        sample_times (Sequence[float]|None): Times in [0, horizon]. Defaults to (0, horizon).

    Returns:
        (Trajectory): Deterministic given (initial, config, sample_times).

    """
    x = np.array(as_points_array(initial), dtype=float)
    times = _validate_sample_times(config, sample_times)

    if not _is_admissible(config, x):
        log.warning(f"Initial configuration has gap {min_gap(x, config.is_covariance):.3e} below the floor")

    if config.horizon == 0:
        return Trajectory(times=times, states=x.reshape(1, -1), config=config)

    rng = derive_rng(config.seed)
    n = x.size
    now = 0.0
    states = np.empty((times.size, n))
    min_step = config.dt * 2.0**-MAX_HALVINGS
    n_steps = 0

    for k, target in enumerate(times):
        while target - now > TIME_TOL * max(1.0, target):
            h = min(config.dt, target - now)
            safe = min_gap(x, positive=config.is_covariance) ** 2 * n / GAP_STEP_DIVISOR
            h = min(h, safe)
            if h < min_step:
                raise StiffnessError(
                    "Collision-safe step fell below the halving limit",
                    gap=min_gap(x, config.is_covariance),
                    seed=config.seed,
                )

            x, used = _advance(config, x, h, rng.standard_normal(n))
            now += used
            n_steps += 1

        states[k] = x

    log.debug(f"Flow {config.drift.value} N={n} seed={config.seed}: {n_steps} steps to t={now:.4g}")

    return Trajectory(times=times, states=states, config=config)


def run_flow_ensemble(
    initials: t.Sequence, config: FlowConfig, sample_times: t.Sequence[float] | None = None
) -> list[Trajectory]:
    """Run one trajectory per initial configuration with seeds derived from `config.seed`."""
    return [
        run_flow(initial, config.with_seed(derive_seed(config.seed, k)), sample_times)
        for k, initial in enumerate(initials)
    ]
