from __future__ import annotations

import math

from .classes import GridDensity
from .constants import OU_MAX_DT, OU_MIN_STEPS
from .operators import weighted_generator

from loguru import logger as log
import numpy as np
from scipy import sparse
from scipy.sparse.linalg import splu

__all__ = ["ou_generator", "apply_generator", "ou_evolve"]


def ou_generator(u: GridDensity) -> tuple[np.ndarray, sparse.csc_matrix]:
    """Node masses m and stiffness K of B = (1/2) d^2 - (beta x / 2) d = (1/(2 gamma)) (gamma f')'."""
    return u.node_masses, weighted_generator(u.edge_weights, u.h)


def apply_generator(u: GridDensity, f: np.ndarray | None = None) -> np.ndarray:
    """B_h f on the grid of `u` (f defaults to u's values)."""
    masses, stiffness = ou_generator(u)
    f = u.values if f is None else np.asarray(f, dtype=float)

    return (stiffness @ f) / masses


def ou_evolve(u: GridDensity, t: float) -> GridDensity:
    """Solve du/dt = B u for time t with Crank-Nicolson and zero-flux ends.

    Description:
        The scheme is written in the gamma-mass form (M - dt K/2) u' = (M + dt K/2) u, so
        int u dgamma is conserved to round-off and u = 1 is an exact fixed point.

    Params:
        u (GridDensity): Initial density.
        t (float): Non-negative time.

    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t == 0:
        return u

    n_steps = max(math.ceil(t / OU_MAX_DT), OU_MIN_STEPS)
    dt = t / n_steps
    masses, stiffness = ou_generator(u)
    mass_matrix = sparse.diags(masses, format="csc")

    lhs = splu((mass_matrix - 0.5 * dt * stiffness).tocsc())
    rhs = (mass_matrix + 0.5 * dt * stiffness).tocsr()

    values = np.array(u.values, dtype=float)
    for _ in range(n_steps):
        values = lhs.solve(rhs @ values)

    log.trace(f"OU flow to t={t:g} in {n_steps} Crank-Nicolson steps")

    return u.with_values(np.clip(values, 0.0, None))
