from __future__ import annotations

import typing as t

from .classes import Trajectory

import numpy as np

__all__ = ["rigidity_q", "rigidity_q_ensemble"]


def rigidity_q(trajectory: Trajectory, gamma: t.Sequence[float]) -> np.ndarray:
    """sum_j (x_j(t) - gamma_j)^2 at every sampled time."""
    gamma = np.asarray(gamma, dtype=float).reshape(-1)
    if gamma.size != trajectory.n:
        raise ValueError(f"gamma has {gamma.size} entries, trajectory has N={trajectory.n}")

    offsets = trajectory.states - gamma[None, :]

    return np.sum(offsets * offsets, axis=1)


def rigidity_q_ensemble(trajectories: t.Sequence[Trajectory], gamma: t.Sequence[float]) -> np.ndarray:
    """Monte Carlo average of `rigidity_q()` over trajectories sampled at the same times."""
    if not trajectories:
        raise ValueError("No trajectories to average")

    times = trajectories[0].times
    for traj in trajectories[1:]:
        if traj.times.shape != times.shape or not np.array_equal(traj.times, times):
            raise ValueError("Trajectories are sampled at different times")

    return np.mean([rigidity_q(traj, gamma) for traj in trajectories], axis=0)
