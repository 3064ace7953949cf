from __future__ import annotations

import math
import typing as t

from rmt_lab.exceptions import DomainError

from .classes import GridDensity, ReverseFlowResult, gaussian_reference
from .constants import CUTOFF_EXPONENT, CUTOFF_RADIUS, MAX_REVERSE_TIME, MOMENT_TOL
from .ou import apply_generator, ou_evolve

from loguru import logger as log
import numpy as np
from scipy.interpolate import CubicSpline

__all__ = [
    "smooth_cutoff",
    "moment_matched_family",
    "reverse_heat_flow",
    "reverse_flow_errors",
]


def _smooth_step(y: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for y <= 0, 1 for y >= 1."""
    y = np.clip(y, 0.0, 1.0)
    a = np.where(y > 0, np.exp(-1.0 / np.where(y > 0, y, 1.0)), 0.0)
    b = np.where(y < 1, np.exp(-1.0 / np.where(y < 1, 1.0 - y, 1.0)), 0.0)

    return a / (a + b)


def smooth_cutoff(y: np.ndarray) -> np.ndarray:
    """theta_0: smooth, 1 on |y| <= 1 and 0 on |y| >= 2."""
    return 1.0 - _smooth_step(np.abs(np.asarray(y, dtype=float)) - 1.0)


def moment_matched_family(epsilon: float) -> t.Callable[[np.ndarray], np.ndarray]:
    """u(x) = 1 + eps exp(-x^2)(x^4 - 2x^2 + 1/3), relative to the beta = 1 Gaussian.

    Description:
        The perturbation has zero mass and zero second moment under gamma, so u keeps
        mean 0 and variance 1. u stays positive for |eps| < 3.

    """

    def _u(x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        x2 = x * x

        return 1.0 + epsilon * np.exp(-x2) * (x2 * x2 - 2.0 * x2 + 1.0 / 3.0)

    return _u


def _truncated_series(u: GridDensity, t: float, order: int) -> np.ndarray:
    """xi_t = sum_{k=1}^{K-1} (-t)^k B^k u / k!."""
    xi = np.zeros_like(u.values)
    term = np.array(u.values, dtype=float)

    for k in range(1, order):
        term = apply_generator(u, term)
        xi += (-t) ** k * term / math.factorial(k)

    return xi


def _standardize(g: GridDensity) -> GridDensity:
    """Translate and dilate g gamma so it has mean 0 and variance 1/beta, then renormalize."""
    mean, var = g.moments()
    scale = math.sqrt(var * g.beta_ref)

    if abs(mean) <= MOMENT_TOL and abs(scale - 1.0) <= MOMENT_TOL:
        return g.normalized()

    x = g.grid
    density = CubicSpline(x, g.values * g.gaussian, extrapolate=False)
    shifted = np.nan_to_num(density(mean + scale * x), nan=0.0)
    values = np.clip(scale * shifted / gaussian_reference(x, g.beta_ref), 0.0, None)

    return g.with_values(values).normalized()


def reverse_heat_flow(
    u: GridDensity,
    t: float,
    order: int,
    alpha: float = CUTOFF_EXPONENT,
    cutoff_radius: float = CUTOFF_RADIUS,
) -> GridDensity:
    """Build g_t with exp(tB) g_t = u + O(t^K).

    Description:
        g_t = u + theta xi_t with xi_t the order-K truncation of exp(-tB) u (minus u) and
        theta(x) = theta_0(t^alpha x / cutoff_radius); the result is renormalized and
        standardized to mean 0 and variance 1/beta by a translation and dilation.

    Params:
        u (GridDensity): Smooth, strictly positive density.
        t (float): Time in [0, 0.1].
        order (int): K in (1, 2, 3).
        alpha (float): Cutoff exponent.
        cutoff_radius (float): |x| below which the cutoff is 1 at t = 1.

    Raises:
        DomainError: K not in (1, 2, 3), t outside [0, 0.1], u not positive, or the
            corrected density turns non-positive (use a smaller t).

    """
    if order not in (1, 2, 3):
        raise DomainError(f"Reverse heat flow order must be 1, 2 or 3, got {order}")
    if not 0 <= t <= MAX_REVERSE_TIME:
        raise DomainError(f"Reverse heat flow needs 0 <= t <= {MAX_REVERSE_TIME}, got t={t}")
    if t == 0:
        return u
    if np.min(u.values) <= 0:
        raise DomainError("Reverse heat flow needs a strictly positive density")

    xi = _truncated_series(u, t, order)
    theta = smooth_cutoff(t**alpha * u.grid / cutoff_radius)
    values = u.values + theta * xi

    if np.min(values) <= 0:
        k = int(np.argmin(values))
        raise DomainError(
            f"Corrected density is non-positive at x={u.grid[k]:.3f} for t={t:g}, K={order}; decrease t"
        )

    g = _standardize(u.with_values(values).normalized())
    log.debug(f"Reverse heat flow t={t:g} K={order}: |xi|_max={np.max(np.abs(xi)):.3e}")

    return g


def reverse_flow_errors(
    u: GridDensity, times: t.Sequence[float], order: int, **kwargs
) -> ReverseFlowResult:
    """||exp(tB) g_t - u||_{L^1(gamma)} for each t, and the least-squares log-log slope."""
    times = np.asarray(times, dtype=float)
    if times.size < 2 or np.any(times <= 0):
        raise ValueError("Need at least two positive times to fit a slope")

    errors = np.array(
        [ou_evolve(reverse_heat_flow(u, float(s), order, **kwargs), float(s)).l1_distance(u) for s in times]
    )
    slope = float(np.polyfit(np.log(times), np.log(errors), 1)[0])

    return ReverseFlowResult(order=order, times=times, errors=errors, slope=slope)
