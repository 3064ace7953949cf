from __future__ import annotations

import typing as t

from rmt_lab.density import DensityModel, density_peak, rho
from rmt_lab.ensembles import SpectralPoints
from rmt_lab.exceptions import DomainError

from .classes import GapStatistics
from .constants import DEFAULT_S_GRID, DEFAULT_WINDOW_EXPONENT, EDGE_FRACTION
from .metrics import ks_distance

from loguru import logger as log
import numpy as np

__all__ = ["default_window", "require_bulk", "gap_statistics", "pooled_gaps", "gap_ks"]


def default_window(n: int, delta: float = DEFAULT_WINDOW_EXPONENT) -> float:
    """ell_N = N^(-delta)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")

    return float(n) ** (-delta)


def require_bulk(model: DensityModel, e: float) -> float:
    """Return rho(E), rejecting energies where rho(E) < 5% of the peak density.

    Raises:
        DomainError: E is at or beyond an edge.

    """
    rho_e = rho(model, e)
    if rho_e <= 0 or rho_e < EDGE_FRACTION * density_peak(model):
        raise DomainError(
            f"E={e:g} is not in the bulk of {model.law.value} (rho(E)={rho_e:.3e})"
        )

    return rho_e


def gap_statistics(
    points: SpectralPoints | np.ndarray,
    model: DensityModel,
    e: float,
    ell: float,
    s_grid: t.Sequence[float] | None = None,
    n: int | None = None,
) -> GapStatistics:
    """Lambda(E; s) = #{j : N rho(E)(x_{j+1} - x_j) <= s, |x_j - E| <= ell} / (2 N ell rho(E)).

    Params:
        points (SpectralPoints|np.ndarray): Sorted configuration.
        model (DensityModel): Law providing rho(E).
        e (float): Bulk energy.
        ell (float): Window half-width.
        s_grid (Sequence[float]|None): Tabulation grid, defaults to 81 points on [0, 4].
        n (int|None): N for the rescaling, defaults to the number of points.

    Raises:
        DomainError: Edge energy.

    """
    if not ell > 0:
        raise ValueError(f"ell must be positive, got {ell}")

    x = points.values if isinstance(points, SpectralPoints) else np.sort(np.asarray(points, dtype=float))
    n = x.size if n is None else int(n)
    rho_e = require_bulk(model, e)
    s_grid = DEFAULT_S_GRID if s_grid is None else np.asarray(s_grid, dtype=float)

    in_window = np.abs(x[:-1] - e) <= ell
    rescaled = n * rho_e * np.diff(x)[in_window]

    ordered = np.sort(rescaled)
    counts = np.searchsorted(ordered, s_grid, side="right").astype(float)
    counts[s_grid <= 0] = 0.0
    curve = counts / (2.0 * n * ell * rho_e)

    if rescaled.size == 0:
        log.warning(f"No gaps in the window |x - {e:g}| <= {ell:g}")

    return GapStatistics(
        e=float(e),
        ell=float(ell),
        rho_e=float(rho_e),
        n=n,
        rescaled_gaps=rescaled,
        s_grid=s_grid,
        lambda_curve=curve,
    )


def pooled_gaps(stats: GapStatistics | t.Sequence[GapStatistics]) -> np.ndarray:
    if isinstance(stats, GapStatistics):
        return stats.rescaled_gaps

    return np.concatenate([s.rescaled_gaps for s in stats]) if stats else np.empty(0)


def gap_ks(
    a: GapStatistics | t.Sequence[GapStatistics],
    b: GapStatistics | t.Sequence[GapStatistics] | np.ndarray,
) -> float:
    """KS distance between pooled rescaled gaps (b may also be a raw reference sample)."""
    ref = b if isinstance(b, np.ndarray) else pooled_gaps(b)

    return ks_distance(pooled_gaps(a), ref)
