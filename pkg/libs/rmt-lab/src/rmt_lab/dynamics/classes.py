from __future__ import annotations

from dataclasses import dataclass, replace
import typing as t

from rmt_lab.ensembles import SpectralPoints
from rmt_lab.enums import DriftKind, SpectrumKind
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.utils import validate_seed

from .constants import COLLISION_FLOOR

import numpy as np

__all__ = ["FlowConfig", "Trajectory"]


@dataclass(frozen=True, eq=False)
class FlowConfig:
    """Parameters of an eigenvalue flow.

    Params:
        drift (DriftKind): dbm, covariance-flow or local-relaxation.
        beta (float): Dyson index, >= 1.
        dt (float): Integrator step (upper bound, halved near collisions).
        horizon (float): Final time tau. `0` means "initial state only".
        d (float|None): Dimension ratio, required for covariance-flow (and a covariance base).
        r (float|None): Relaxation radius R, required for local-relaxation.
        gamma (np.ndarray|None): Classical locations, required for local-relaxation.
        base (DriftKind): Drift that local-relaxation confines (dbm or covariance-flow).
        collision_floor (float): Minimum allowed gap.
        seed (int): 64-bit seed of the Brownian increments.

    """

    drift: DriftKind
    beta: float
    dt: float
    horizon: float
    d: float | None = None
    r: float | None = None
    gamma: np.ndarray | None = None
    base: DriftKind = DriftKind.DBM
    collision_floor: float = COLLISION_FLOOR
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "drift", DriftKind(self.drift))
            object.__setattr__(self, "base", DriftKind(self.base))
            object.__setattr__(self, "seed", validate_seed(self.seed))
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"flow: {exc}") from exc

        if not float(self.beta) >= 1:
            raise ConfigurationError(f"flow: beta must be >= 1, got {self.beta}")
        if not float(self.dt) > 0:
            raise ConfigurationError(f"flow: dt must be positive, got {self.dt}")
        if not float(self.horizon) >= 0:
            raise ConfigurationError(f"flow: horizon must be non-negative, got {self.horizon}")
        if self.horizon > 0 and self.dt > self.horizon:
            raise ConfigurationError(
                f"flow: dt={self.dt:g} exceeds horizon={self.horizon:g}"
            )
        if not float(self.collision_floor) > 0:
            raise ConfigurationError("flow: collision_floor must be positive")

        if self.base is DriftKind.LOCAL_RELAXATION:
            raise ConfigurationError("flow: local-relaxation cannot be its own base drift")

        if self.is_covariance and (self.d is None or not 0 < float(self.d) < 1):
            raise ConfigurationError(f"flow: covariance flows require 0<d<1, got d={self.d}")

        if self.drift is DriftKind.LOCAL_RELAXATION:
            if self.r is None or not float(self.r) > 0:
                raise ConfigurationError(f"flow: local-relaxation requires r > 0, got r={self.r}")
            if self.gamma is None:
                raise ConfigurationError("flow: local-relaxation requires gamma")

        if self.gamma is not None:
            gamma = np.array(self.gamma, dtype=float).reshape(-1)
            gamma.setflags(write=False)
            object.__setattr__(self, "gamma", gamma)

    @property
    def effective_drift(self) -> DriftKind:
        """The interaction drift, with the local-relaxation confinement stripped."""
        return self.base if self.drift is DriftKind.LOCAL_RELAXATION else self.drift

    @property
    def is_covariance(self) -> bool:
        return self.effective_drift is DriftKind.COVARIANCE_FLOW

    def with_seed(self, seed: int) -> "FlowConfig":
        return replace(self, seed=seed)

    def as_dict(self) -> dict[str, t.Any]:
        return {
            "drift": self.drift.value,
            "beta": self.beta,
            "dt": self.dt,
            "horizon": self.horizon,
            "d": self.d,
            "r": self.r,
            "base": self.base.value,
            "collision_floor": self.collision_floor,
            "seed": self.seed,
        }


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States of a flow at the requested sample times.

    Params:
        times (np.ndarray): Strictly increasing sample times, shape (T,).
        states (np.ndarray): Shape (T, N), every row strictly increasing.
        config (FlowConfig): The flow that produced it.

    """

    times: np.ndarray
    states: np.ndarray
    config: FlowConfig

    def __post_init__(self):
        times = np.array(self.times, dtype=float).reshape(-1)
        states = np.array(self.states, dtype=float)
        if states.ndim == 1:
            states = states.reshape(1, -1)

        if states.shape[0] != times.size:
            raise ValueError(f"{times.size} times but {states.shape[0]} states")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("Trajectory times must be strictly increasing")
        if states.shape[1] > 1 and np.any(np.diff(states, axis=1) <= 0):
            raise ValueError("Trajectory states must be strictly ordered")
        if self.config.is_covariance and np.any(states <= 0):
            raise ValueError("Covariance-flow states must be strictly positive")

        times.setflags(write=False)
        states.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", states)

    @property
    def n(self) -> int:
        return int(self.states.shape[1])

    def __len__(self) -> int:
        return int(self.times.size)

    def points(self, index: int) -> SpectralPoints:
        kind = SpectrumKind.SINGULAR_VALUES if self.config.is_covariance else SpectrumKind.EIGENVALUES

        return SpectralPoints(values=self.states[index], kind=kind)

    @property
    def final(self) -> SpectralPoints:
        return self.points(-1)
