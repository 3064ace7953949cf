from __future__ import annotations

from pathlib import Path
import typing as t

from rmt_lab.io import read_checkpoint, write_checkpoint

from .classes import FlowConfig, Trajectory

import numpy as np
import pandas as pd

__all__ = ["save_checkpoint", "load_checkpoint", "trajectory_frame"]


def save_checkpoint(trajectory: Trajectory, path: t.Union[str, Path]) -> Path:
    return write_checkpoint(path, trajectory.times, trajectory.states)


def load_checkpoint(path: t.Union[str, Path], config: FlowConfig) -> Trajectory:
    """Rebuild a trajectory from a checkpoint. The config is not stored in the file."""
    times, states = read_checkpoint(path)

    return Trajectory(times=times, states=states, config=config)


def trajectory_frame(trajectory: Trajectory, seed: int | None = None) -> pd.DataFrame:
    """Long-format `seed, time, k, value` rows (k is 1-based)."""
    n_times, n = trajectory.states.shape
    seed = trajectory.config.seed if seed is None else seed

    return pd.DataFrame(
        {
            "seed": np.full(n_times * n, seed, dtype=np.uint64),
            "time": np.repeat(trajectory.times, n),
            "k": np.tile(np.arange(1, n + 1), n_times),
            "value": trajectory.states.reshape(-1),
        }
    )
