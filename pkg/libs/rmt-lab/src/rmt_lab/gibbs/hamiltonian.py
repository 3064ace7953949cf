from __future__ import annotations

import typing as t

from rmt_lab.ensembles import SpectralPoints
from rmt_lab.enums import HamiltonianKind
from rmt_lab.exceptions import SingularConfigurationError

from .classes import HamiltonianSpec, PseudoPotential
from .constants import SINGULAR_GAP

from loguru import logger as log
import numpy as np

__all__ = [
    "covariance_coefficient",
    "energy",
    "grad",
    "hessian_quadratic_form",
    "pseudo_energy",
    "pseudo_grad",
    "as_points_array",
    "check_configuration",
]

Points = t.Union[SpectralPoints, np.ndarray, t.Sequence[float]]


def as_points_array(x: Points) -> np.ndarray:
    if isinstance(x, SpectralPoints):
        return np.asarray(x.values, dtype=float)

    return np.asarray(x, dtype=float).reshape(-1)


def check_configuration(x: np.ndarray, positive: bool = False) -> None:
    """Reject coincident points (and non-positive ones when `positive`).

    Raises:
        SingularConfigurationError: Carries the offending (sorted) index pair.

    """
    if x.size > 1:
        order = np.argsort(x, kind="stable")
        gaps = np.diff(x[order])
        k = int(np.argmin(gaps))
        if gaps[k] < SINGULAR_GAP:
            pair = (int(order[k]), int(order[k + 1]))
            raise SingularConfigurationError(
                f"Points {pair} are closer than {SINGULAR_GAP:g} (gap={gaps[k]:.3e})",
                indices=pair,
            )

    if positive and x.size and np.min(x) < SINGULAR_GAP:
        k = int(np.argmin(x))
        raise SingularConfigurationError(
            f"Covariance configurations must be positive, x[{k}]={x[k]:.3e}", indices=(k, k)
        )


def covariance_coefficient(spec: HamiltonianSpec) -> float:
    """c_N = N(1/d - 1) + 1 - 1/beta; a warning is logged when c_N < 1."""
    c = spec.c_n
    if spec.kind is HamiltonianKind.COVARIANCE and c < 1:
        log.warning(f"Covariance coefficient c_N={c:.4f} < 1 (n={spec.n}, d={spec.d})")

    return c


def _prepare(spec: HamiltonianSpec, x: Points) -> np.ndarray:
    arr = as_points_array(x)
    if arr.size != spec.n:
        raise ValueError(f"Configuration has {arr.size} points, spec expects n={spec.n}")

    check_configuration(arr, positive=spec.kind is HamiltonianKind.COVARIANCE)

    return arr


def _pair_differences(x: np.ndarray) -> np.ndarray:
    """Matrix x_i - x_j with a unit diagonal (safe to invert, masked by callers)."""
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)

    return diff


def energy(spec: HamiltonianSpec, x: Points) -> float:
    """N * H(x), including the log|x_i + x_j| and log x_i terms for covariance.

    Raises:
        SingularConfigurationError: Coincident (or, for covariance, non-positive) points.

    """
    x = _prepare(spec, x)
    n = spec.n
    iu = np.triu_indices(n, k=1)
    log_gaps = np.log(np.abs(x[iu[1]] - x[iu[0]]))

    if spec.kind is HamiltonianKind.WIGNER:
        value = n * np.sum(x * x) / 4.0 - np.sum(log_gaps)
    else:
        log_sums = np.log(x[iu[0]] + x[iu[1]])
        value = (
            n * np.sum(x * x) / (2.0 * spec.d)
            - np.sum(log_gaps)
            - np.sum(log_sums)
            - spec.c_n * np.sum(np.log(x))
        )

    return float(spec.beta * value)


def grad(spec: HamiltonianSpec, x: Points) -> np.ndarray:
    """Gradient of N * H(x)."""
    x = _prepare(spec, x)
    n = spec.n
    inv = 1.0 / _pair_differences(x)
    np.fill_diagonal(inv, 0.0)

    if spec.kind is HamiltonianKind.WIGNER:
        g = n * x / 2.0 - inv.sum(axis=1)
    else:
        inv_sum = 1.0 / (x[:, None] + x[None, :])
        np.fill_diagonal(inv_sum, 0.0)
        g = n * x / spec.d - inv.sum(axis=1) - inv_sum.sum(axis=1) - spec.c_n / x

    return spec.beta * g


def hessian_quadratic_form(
    spec: HamiltonianSpec,
    x: Points,
    v: t.Sequence[float],
    u_second_derivative: float | None = None,
) -> float:
    """<v, Hess H(x) v> in the per-particle normalization of H (not N * H).

    Params:
        spec (HamiltonianSpec): The measure.
        x (SpectralPoints|np.ndarray): Configuration.
        v (Sequence[float]): Direction, length n.
        u_second_derivative (float|None): Replaces U'' (test hook for sharpness checks).

    """
    x = _prepare(spec, x)
    v = np.asarray(v, dtype=float).reshape(-1)
    if v.size != spec.n:
        raise ValueError(f"Direction has {v.size} entries, spec expects n={spec.n}")

    n = spec.n
    u2 = spec.u_second_derivative if u_second_derivative is None else float(u_second_derivative)
    iu = np.triu_indices(n, k=1)
    dv = v[iu[0]] - v[iu[1]]
    dx = x[iu[0]] - x[iu[1]]
    form = u2 * np.sum(v * v) + np.sum(dv * dv / (dx * dx)) / n

    if spec.kind is HamiltonianKind.COVARIANCE:
        sv = v[iu[0]] + v[iu[1]]
        sx = x[iu[0]] + x[iu[1]]
        form += np.sum(sv * sv / (sx * sx)) / n + spec.c_n * np.sum(v * v / (x * x)) / n

    return float(spec.beta * form)


def _pseudo_prepare(pp: PseudoPotential, x: Points) -> np.ndarray:
    arr = as_points_array(x)
    if arr.size != pp.n:
        raise ValueError(f"Configuration has {arr.size} points, pseudo-potential expects n={pp.n}")

    return arr


def pseudo_energy(pp: PseudoPotential, x: Points) -> float:
    """N * W(x) = N * sum (x_j - gamma_j)^2 / (2R^2)."""
    offset = _pseudo_prepare(pp, x) - pp.gamma

    return float(pp.n * np.sum(offset * offset) / (2.0 * pp.r**2))


def pseudo_grad(pp: PseudoPotential, x: Points) -> np.ndarray:
    """Gradient of N * W(x)."""
    return pp.n * (_pseudo_prepare(pp, x) - pp.gamma) / pp.r**2
