from __future__ import annotations

from rmt_lab.enums import DriftKind, HamiltonianKind
from rmt_lab.gibbs import HamiltonianSpec, PseudoPotential, as_points_array, check_configuration

from .classes import FlowConfig

import numpy as np

__all__ = ["drift_vector", "hamiltonian_spec_for", "pseudo_potential_for"]


def _inverse_differences(x: np.ndarray) -> np.ndarray:
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    inv = 1.0 / diff
    np.fill_diagonal(inv, 0.0)

    return inv


def _dbm_drift(beta: float, x: np.ndarray) -> np.ndarray:
    n = x.size

    return beta * (-x / 4.0 + _inverse_differences(x).sum(axis=1) / (2.0 * n))


def _covariance_drift(beta: float, d: float, x: np.ndarray) -> np.ndarray:
    n = x.size
    inv_sum = 1.0 / (x[:, None] + x[None, :])
    np.fill_diagonal(inv_sum, 0.0)
    repulsion = _inverse_differences(x).sum(axis=1) + inv_sum.sum(axis=1)
    wall = 0.5 * (beta * (1.0 / d - 1.0) + (beta - 1.0) / n)

    return -beta * x / (2.0 * d) + beta * repulsion / (2.0 * n) + wall / x


def drift_vector(config: FlowConfig, x) -> np.ndarray:
    """Drift of the eigenvalue SDE dx = drift dt + dB / sqrt(N).

    Description:
        dbm: beta [-x_i/4 + (1/2N) sum_{j!=i} 1/(x_i - x_j)].
        covariance-flow: -beta x_i/(2d) + (beta/2N) sum_{j!=i} [1/(x_i - x_j) + 1/(x_i + x_j)]
        + (1/2)(beta(1/d - 1) + (beta - 1)/N) / x_i.
        local-relaxation: base drift - (x_i - gamma_i)/(2R^2).

        Each drift equals -grad(N H)/(2N) of the matching Hamiltonian (plus N W).

    Raises:
        SingularConfigurationError: Coincident (or non-positive covariance) points.

    """
    arr = as_points_array(x)
    check_configuration(arr, positive=config.is_covariance)

    if config.effective_drift is DriftKind.COVARIANCE_FLOW:
        drift = _covariance_drift(config.beta, config.d, arr)
    else:
        drift = _dbm_drift(config.beta, arr)

    if config.drift is DriftKind.LOCAL_RELAXATION:
        if config.gamma.size != arr.size:
            raise ValueError(f"gamma has {config.gamma.size} entries, configuration has {arr.size}")
        drift = drift - 0.5 * (arr - config.gamma) / config.r**2

    return drift


def hamiltonian_spec_for(config: FlowConfig, n: int) -> HamiltonianSpec:
    """The equilibrium Hamiltonian whose gradient drives `config`."""
    if config.is_covariance:
        return HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=config.beta, n=n, d=config.d)

    return HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=config.beta, n=n)


def pseudo_potential_for(config: FlowConfig) -> PseudoPotential | None:
    if config.drift is not DriftKind.LOCAL_RELAXATION:
        return None

    return PseudoPotential(gamma=config.gamma, r=config.r)
