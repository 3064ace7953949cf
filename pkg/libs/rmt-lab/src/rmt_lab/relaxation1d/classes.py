from __future__ import annotations

from dataclasses import dataclass, field, replace
import typing as t

from rmt_lab.exceptions import ConfigurationError

from .constants import (
    DEFAULT_GRID_POINTS,
    DEFAULT_HALF_WIDTH,
    GAP_CELLS,
    GAP_CENTER,
    GAP_DT,
)
from .operators import trapezoid_weights

import numpy as np
import pandas as pd

__all__ = [
    "gaussian_reference",
    "GridDensity",
    "ReverseFlowResult",
    "GapFlowConfig",
    "GapModel",
    "EntropyCurve",
]


def gaussian_reference(x: np.ndarray, beta: float) -> np.ndarray:
    """gamma(x) = sqrt(beta / 2pi) exp(-beta x^2 / 2)."""
    return np.sqrt(beta / (2.0 * np.pi)) * np.exp(-0.5 * beta * x * x)


@dataclass(frozen=True, eq=False)
class GridDensity:
    """Density u relative to the Gaussian reference gamma on a uniform grid of [-L, L].

    Params:
        grid (np.ndarray): Uniform, symmetric nodes.
        values (np.ndarray): u >= 0 at the nodes.
        beta_ref (float): Inverse variance of the reference Gaussian.

    """

    grid: np.ndarray
    values: np.ndarray
    beta_ref: float = 1.0

    def __post_init__(self):
        grid = np.array(self.grid, dtype=float).reshape(-1)
        values = np.array(self.values, dtype=float).reshape(-1)

        if grid.size < 3 or grid.size != values.size:
            raise ValueError(f"Grid of {grid.size} nodes with {values.size} values")
        if not np.allclose(np.diff(grid), grid[1] - grid[0], rtol=1e-9, atol=0.0):
            raise ValueError("GridDensity needs a uniform grid")
        if np.any(~np.isfinite(values)) or np.any(values < 0):
            raise ValueError("Density values must be finite and non-negative")
        if not self.beta_ref > 0:
            raise ValueError(f"beta_ref must be positive, got {self.beta_ref}")

        grid.setflags(write=False)
        values.setflags(write=False)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(
        cls,
        func: t.Callable[[np.ndarray], np.ndarray],
        beta: float = 1.0,
        half_width: float = DEFAULT_HALF_WIDTH,
        n_points: int = DEFAULT_GRID_POINTS,
        normalize: bool = True,
    ) -> "GridDensity":
        """Tabulate u = func(x) on `n_points` nodes of [-L, L], normalized so that int u dgamma = 1."""
        grid = np.linspace(-half_width, half_width, n_points)
        density = cls(grid=grid, values=np.asarray(func(grid), dtype=float), beta_ref=beta)

        return density.normalized() if normalize else density

    @classmethod
    def constant(
        cls,
        beta: float = 1.0,
        half_width: float = DEFAULT_HALF_WIDTH,
        n_points: int = DEFAULT_GRID_POINTS,
    ) -> "GridDensity":
        return cls.from_function(np.ones_like, beta=beta, half_width=half_width, n_points=n_points)

    @property
    def h(self) -> float:
        return float(self.grid[1] - self.grid[0])

    @property
    def n(self) -> int:
        return int(self.grid.size)

    @property
    def gaussian(self) -> np.ndarray:
        return gaussian_reference(self.grid, self.beta_ref)

    @property
    def node_masses(self) -> np.ndarray:
        """Trapezoid weights times gamma: the measure the grid operators are symmetric for."""
        return trapezoid_weights(self.n, self.h) * self.gaussian

    @property
    def edge_weights(self) -> np.ndarray:
        midpoints = 0.5 * (self.grid[1:] + self.grid[:-1])

        return gaussian_reference(midpoints, self.beta_ref)

    @property
    def mass(self) -> float:
        """int u dgamma (trapezoid)."""
        return float(np.sum(self.node_masses * self.values))

    def normalized(self) -> "GridDensity":
        mass = self.mass
        if not mass > 0:
            raise ValueError("Cannot normalize a density of zero mass")

        return self.with_values(self.values / mass)

    def with_values(self, values: np.ndarray) -> "GridDensity":
        return replace(self, values=values)

    def moments(self) -> tuple[float, float]:
        """Mean and variance of the probability density u * gamma."""
        weights = self.node_masses * self.values
        mass = weights.sum()
        mean = float(np.sum(weights * self.grid) / mass)
        var = float(np.sum(weights * (self.grid - mean) ** 2) / mass)

        return mean, var

    def l1_distance(self, other: "GridDensity") -> float:
        """||u - v||_{L^1(gamma)} on a shared grid."""
        if other.n != self.n or not np.array_equal(other.grid, self.grid):
            raise ValueError("L1 distance needs densities on the same grid")

        return float(np.sum(self.node_masses * np.abs(self.values - other.values)))

    def resample(self, grid: np.ndarray) -> "GridDensity":
        """Linear interpolation onto another grid (no renormalization)."""
        values = np.interp(grid, self.grid, self.values, left=0.0, right=0.0)

        return GridDensity(grid=grid, values=values, beta_ref=self.beta_ref)


@dataclass(frozen=True, eq=False)
class ReverseFlowResult:
    """L1(gamma) errors of exp(tB) g_t against u and their fitted log-log slope."""

    order: int
    times: np.ndarray
    errors: np.ndarray
    slope: float

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"order": self.order, "t": self.times, "l1_error": self.errors})


@dataclass(frozen=True)
class GapFlowConfig:
    """Two-particle relaxation flow, reduced to the gap u = x_2 - x_1 > 0.

    Description:
        Stationary density omega(u) ~ u^beta exp(-beta u^2/4) exp(-(u - g)^2/(2R^2)),
        generator (1/(2 omega)) (omega q')'.

    Params:
        beta (float): Dyson index, >= 1.
        r (float): Relaxation radius R.
        g (float): Classical gap gamma_2 - gamma_1.
        u_max (float|None): Right end of the grid, default g + 10R + 4.
        n_cells (int): Number of cells.
        dt (float): Implicit Euler step.

    """

    beta: float
    r: float
    g: float = GAP_CENTER
    u_max: float | None = None
    n_cells: int = GAP_CELLS
    dt: float = GAP_DT

    def __post_init__(self):
        if not float(self.beta) >= 1:
            raise ConfigurationError(f"gap-flow: beta must be >= 1, got {self.beta}")
        if not float(self.r) > 0:
            raise ConfigurationError(f"gap-flow: r must be positive, got {self.r}")
        if not float(self.g) > 0:
            raise ConfigurationError(f"gap-flow: g must be positive, got {self.g}")
        if not float(self.dt) > 0:
            raise ConfigurationError(f"gap-flow: dt must be positive, got {self.dt}")
        if int(self.n_cells) < 10:
            raise ConfigurationError(f"gap-flow: n_cells must be >= 10, got {self.n_cells}")
        if self.u_max is None:
            object.__setattr__(self, "u_max", self.g + 10.0 * self.r + 4.0)
        elif not self.u_max > self.g:
            raise ConfigurationError(f"gap-flow: u_max={self.u_max} must exceed g={self.g}")

    @property
    def h(self) -> float:
        return self.u_max / self.n_cells

    def as_dict(self) -> dict[str, t.Any]:
        return {
            "beta": self.beta,
            "r": self.r,
            "g": self.g,
            "u_max": self.u_max,
            "n_cells": self.n_cells,
            "dt": self.dt,
        }


@dataclass(frozen=True, eq=False)
class GapModel:
    """Cell-centered discretization of the gap flow.

    Params:
        config (GapFlowConfig): The flow.
        centers (np.ndarray): Cell centers (i + 1/2) h.
        masses (np.ndarray): omega-masses of the cells, summing to 1.
        edge_weights (np.ndarray): Normalized omega at the interior cell interfaces.

    """

    config: GapFlowConfig
    centers: np.ndarray
    masses: np.ndarray
    edge_weights: np.ndarray

    @property
    def h(self) -> float:
        return self.config.h


@dataclass(frozen=True, eq=False)
class EntropyCurve:
    """S(q_t) and D(sqrt(q_t)) along the gap flow, plus the mass drift |sum m q - 1|."""

    times: np.ndarray
    entropy: np.ndarray
    dirichlet: np.ndarray
    mass_error: np.ndarray
    config: GapFlowConfig | None = field(default=None, repr=False)

    def is_monotone(self, slack: float = 1e-9) -> bool:
        return bool(np.all(np.diff(self.entropy) <= slack))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.times, "S": self.entropy, "D": self.dirichlet})
