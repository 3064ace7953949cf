from __future__ import annotations

import typing as t

from rmt_lab.exceptions import RefinementError

from .classes import EntropyCurve, GapFlowConfig, GapModel
from .constants import (
    ENTROPY_FIT_FRACTION,
    ENTROPY_FLOOR,
    GAP_FIRST_CELL_MASS,
    GAP_RESOLUTION,
)
from .operators import dirichlet_energy, weighted_generator

from loguru import logger as log
import numpy as np
from scipy import sparse
from scipy.sparse.linalg import splu
from scipy.special import xlogy

__all__ = [
    "log_gap_weight",
    "gap_model",
    "normalize_relative_density",
    "shifted_bump",
    "relative_entropy",
    "dirichlet_form",
    "lsi_ratio",
    "fokker_planck_gap",
    "fit_decay_rate",
]


def log_gap_weight(config: GapFlowConfig, u: np.ndarray) -> np.ndarray:
    """log omega(u) up to a constant: beta log u - beta u^2/4 - (u - g)^2/(2R^2)."""
    u = np.asarray(u, dtype=float)

    return (
        config.beta * np.log(u)
        - 0.25 * config.beta * u * u
        - (u - config.g) ** 2 / (2.0 * config.r**2)
    )


def gap_model(config: GapFlowConfig) -> GapModel:
    """Discretize omega on the cell-centered half-line grid.

    Raises:
        RefinementError: h > min(R, g)/20, or the first cell carries more than 1e-3 of the mass.

    """
    h = config.h
    limit = min(config.r, config.g) / GAP_RESOLUTION
    if h > limit:
        raise RefinementError(
            f"Gap grid too coarse: h={h:.3e} > min(R, g)/{GAP_RESOLUTION:g}={limit:.3e}; raise n_cells"
        )

    centers = (np.arange(config.n_cells) + 0.5) * h
    interfaces = np.arange(1, config.n_cells) * h

    ## Shift by the max so exp() stays in range
    log_w = log_gap_weight(config, centers)
    shift = np.max(log_w)
    weights = np.exp(log_w - shift)
    z = h * weights.sum()

    masses = h * weights / z
    edge_weights = np.exp(log_gap_weight(config, interfaces) - shift) / z

    if masses[0] > GAP_FIRST_CELL_MASS:
        raise RefinementError(
            f"First gap cell carries mass {masses[0]:.3e} > {GAP_FIRST_CELL_MASS:g}; refine the grid"
        )

    return GapModel(config=config, centers=centers, masses=masses, edge_weights=edge_weights)


def normalize_relative_density(model: GapModel, q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.shape != model.masses.shape:
        raise ValueError(f"Relative density has shape {q.shape}, grid has {model.masses.shape}")
    if np.any(q < 0) or not np.all(np.isfinite(q)):
        raise ValueError("Relative density must be finite and non-negative")

    return q / np.sum(model.masses * q)


def shifted_bump(model: GapModel, shift: float = 0.5, width: float = 0.25, height: float = 4.0) -> np.ndarray:
    """Bounded relative density 1 + height exp(-(u - g - shift)^2 / (2 width^2)), normalized."""
    u = model.centers
    bump = 1.0 + height * np.exp(-((u - model.config.g - shift) ** 2) / (2.0 * width**2))

    return normalize_relative_density(model, bump)


def relative_entropy(model: GapModel, q: np.ndarray) -> float:
    """S_omega(q) = sum m q log q."""
    return float(np.sum(model.masses * xlogy(q, q)))


def dirichlet_form(model: GapModel, f: np.ndarray) -> float:
    """D_omega(f) = (1/2) int f'^2 domega, in the discrete form matching the generator."""
    return dirichlet_energy(model.edge_weights, model.h, np.asarray(f, dtype=float))


def lsi_ratio(model: GapModel, q: np.ndarray) -> float:
    """S(q) / (R^2 D(sqrt q)), the constant a log-Sobolev inequality has to dominate."""
    q = normalize_relative_density(model, q)
    d = dirichlet_form(model, np.sqrt(q))
    if d == 0:
        return 0.0

    return relative_entropy(model, q) / (model.config.r**2 * d)


def _implicit_euler_solver(model: GapModel, dt: float):
    stiffness = weighted_generator(model.edge_weights, model.h)
    mass_matrix = sparse.diags(model.masses, format="csc")

    return splu((mass_matrix - dt * stiffness).tocsc())


def fokker_planck_gap(
    config: GapFlowConfig,
    q0: np.ndarray | t.Callable[[np.ndarray], np.ndarray] | None,
    t_grid: t.Sequence[float],
) -> EntropyCurve:
    """Evolve dq/dt = L q (L = (1/(2 omega)) (omega q')') and record S(q_t) and D(sqrt q_t).

    Description:
        Finite volumes on the omega-measure with zero-flux ends and implicit Euler in time.
        Each implicit Euler step is a Markov kernel reversible for omega, so S is
        non-increasing and sum m q stays 1.

    Params:
        config (GapFlowConfig): The flow.
        q0 (np.ndarray|Callable|None): Initial relative density on the cell centers,
            a function of u, or `None` for `shifted_bump()`.
        t_grid (Sequence[float]): Non-negative, increasing record times.

    Raises:
        RefinementError: The grid does not resolve the boundary layer at 0.

    """
    model = gap_model(config)
    times = np.asarray(t_grid, dtype=float).reshape(-1)
    if times.size == 0 or times[0] < 0 or np.any(np.diff(times) <= 0):
        raise ValueError("t_grid must be non-negative and strictly increasing")

    if q0 is None:
        q = shifted_bump(model)
    elif callable(q0):
        q = normalize_relative_density(model, q0(model.centers))
    else:
        q = normalize_relative_density(model, q0)

    solvers: dict[float, t.Any] = {}

    def _solve(values: np.ndarray, dt: float) -> np.ndarray:
        key = round(dt, 15)
        if key not in solvers:
            solvers[key] = _implicit_euler_solver(model, dt)
        return solvers[key].solve(model.masses * values)

    entropy = np.empty(times.size)
    dirichlet = np.empty(times.size)
    mass_error = np.empty(times.size)
    now = 0.0
    tol = 1e-9 * config.dt

    for k, target in enumerate(times):
        while target - now > tol:
            dt = min(config.dt, target - now)
            q = _solve(q, dt)
            now += dt
        q = np.clip(q, 0.0, None)
        entropy[k] = relative_entropy(model, q)
        dirichlet[k] = dirichlet_form(model, np.sqrt(q))
        mass_error[k] = abs(float(np.sum(model.masses * q)) - 1.0)

    log.debug(
        f"Gap flow beta={config.beta} R={config.r}: S {entropy[0]:.3e} -> {entropy[-1]:.3e}"
    )

    return EntropyCurve(
        times=times, entropy=entropy, dirichlet=dirichlet, mass_error=mass_error, config=config
    )


def fit_decay_rate(
    curve: EntropyCurve,
    floor: float = ENTROPY_FLOOR,
    fraction: float = ENTROPY_FIT_FRACTION,
) -> float:
    """Exponential rate of S from a log-linear fit over floor < S < fraction * S(0).

    Raises:
        ValueError: Fewer than three points inside the fit window.

    """
    s0 = curve.entropy[0]
    mask = (curve.entropy > floor) & (curve.entropy < fraction * s0)
    if np.count_nonzero(mask) < 3:
        raise ValueError(
            f"Only {np.count_nonzero(mask)} entropy samples in ({floor:g}, {fraction:g} S0); extend t_grid"
        )

    slope = np.polyfit(curve.times[mask], np.log(curve.entropy[mask]), 1)[0]

    return float(-slope)
