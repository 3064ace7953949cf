from __future__ import annotations

import math
import typing as t

from rmt_lab.density import DensityModel
from rmt_lab.ensembles import SpectralPoints

from .classes import CorrelationEstimate, CorrelationHistogram
from .constants import DEFAULT_ANCHOR_POINTS, MIN_BIN_COUNT
from .gaps import require_bulk

from loguru import logger as log
import numpy as np

__all__ = [
    "correlation_grid",
    "correlation_histogram",
    "estimate_from_histogram",
    "correlation_estimate",
]


def correlation_grid(
    anchor_edges: t.Sequence[float], separation_edges: t.Sequence[float], order: int
) -> tuple[np.ndarray, ...]:
    """Rectangular grid: one anchor axis followed by `order - 1` copies of the separation axis."""
    anchor = np.asarray(anchor_edges, dtype=float)
    sep = np.asarray(separation_edges, dtype=float)

    return (anchor,) + tuple(sep.copy() for _ in range(order - 1))


def _validate_grid(order: int, grid: t.Sequence[t.Sequence[float]]) -> tuple[np.ndarray, ...]:
    if order not in (1, 2, 3):
        raise ValueError(f"Correlation order must be 1, 2 or 3, got {order}")

    edges = tuple(np.asarray(g, dtype=float) for g in grid)
    if len(edges) != order:
        raise ValueError(f"Order {order} needs {order} grid axes, got {len(edges)}")
    for axis in edges:
        if axis.ndim != 1 or axis.size < 2 or np.any(np.diff(axis) <= 0):
            raise ValueError("Grid axes must be strictly increasing edge vectors")

    return edges


def _sample_tuples(
    x: np.ndarray, scale: float, anchors: np.ndarray, edges: tuple[np.ndarray, ...]
) -> np.ndarray:
    """All rescaled tuples (alpha_1, sep_2, ..) of one sample whose anchor lies on the grid."""
    order = len(edges)
    a_lo, a_hi = edges[0][0], edges[0][-1]
    rows: list[np.ndarray] = []

    if order > 1:
        s_lo = min(axis[0] for axis in edges[1:])
        s_hi = max(axis[-1] for axis in edges[1:])

    for anchor in anchors:
        first = np.searchsorted(x, anchor + a_lo / scale, side="left")
        last = np.searchsorted(x, anchor + a_hi / scale, side="right")

        for i in range(first, last):
            alpha = scale * (x[i] - anchor)
            if order == 1:
                rows.append(np.array([[alpha]]))
                continue

            ## sep = scale (x_i - x_j) in [s_lo, s_hi]  <=>  x_j in [x_i - s_hi/scale, x_i - s_lo/scale]
            j_lo = np.searchsorted(x, x[i] - s_hi / scale, side="left")
            j_hi = np.searchsorted(x, x[i] - s_lo / scale, side="right")
            partners = np.arange(j_lo, j_hi)
            partners = partners[partners != i]
            if partners.size == 0:
                continue
            seps = scale * (x[i] - x[partners])

            if order == 2:
                rows.append(np.column_stack([np.full(seps.size, alpha), seps]))
            else:
                jj, kk = np.meshgrid(np.arange(seps.size), np.arange(seps.size), indexing="ij")
                mask = jj != kk
                if not np.any(mask):
                    continue
                rows.append(
                    np.column_stack(
                        [np.full(int(mask.sum()), alpha), seps[jj[mask]], seps[kk[mask]]]
                    )
                )

    if not rows:
        return np.empty((0, order))

    return np.vstack(rows)


def correlation_histogram(
    samples: t.Sequence[SpectralPoints | np.ndarray],
    model: DensityModel,
    order: int,
    e: float,
    b: float,
    grid: t.Sequence[t.Sequence[float]],
    n_anchors: int = DEFAULT_ANCHOR_POINTS,
) -> CorrelationHistogram:
    """Count ordered n-tuples of distinct points binned by (N rho(E)(x_{i1} - E'), N rho(E)(x_{i1} - x_{ik}))
    for E' on `n_anchors` equally spaced points of [E - b, E + b].

    Raises:
        DomainError: Edge energy.

    """
    edges = _validate_grid(order, grid)
    if not b > 0:
        raise ValueError(f"Energy half-window b must be positive, got {b}")
    if not samples:
        raise ValueError("No samples")

    rho_e = require_bulk(model, e)
    anchors = np.linspace(e - b, e + b, int(n_anchors))
    arrays = [
        s.values if isinstance(s, SpectralPoints) else np.sort(np.asarray(s, dtype=float))
        for s in samples
    ]
    n_points = arrays[0].size
    if any(a.size != n_points for a in arrays):
        raise ValueError("All samples must have the same number of points")

    hist = CorrelationHistogram.empty(order, edges, n_anchors=int(n_anchors), n_points=n_points)
    scale = n_points * rho_e

    for x in arrays:
        tuples = _sample_tuples(x, scale, anchors, edges)
        counts, _ = np.histogramdd(tuples, bins=edges)
        hist = hist.add_sample(counts.astype(np.int64))

    return hist


def _falling_factor(n_points: int, order: int) -> float:
    """N^n (N - n)! / N!: turns ordered distinct tuple counts into rescaled correlations."""
    return math.prod(n_points / (n_points - k) for k in range(order))


def estimate_from_histogram(hist: CorrelationHistogram, e: float, b: float) -> CorrelationEstimate:
    """Normalize (possibly merged) tuple counts into a correlation estimate with standard errors."""
    if hist.n_samples < 1:
        raise ValueError("Histogram holds no samples")

    s = hist.n_samples
    factor = _falling_factor(hist.n_points, hist.order)
    per_sample_scale = factor / (hist.bin_volumes * hist.n_anchors)

    counts = hist.counts.astype(float)
    values = per_sample_scale * counts / s

    if s > 1:
        var = (hist.squares.astype(float) - counts * counts / s) / (s - 1)
        stderr = per_sample_scale * np.sqrt(np.clip(var, 0.0, None) / s)
    else:
        stderr = np.full_like(values, np.nan)

    expected_flat = hist.bin_volumes * hist.n_anchors * s / factor
    low = bool(np.min(expected_flat) < MIN_BIN_COUNT)
    if low:
        log.warning(
            f"Low statistics: a flat order-{hist.order} correlation would put "
            f"{np.min(expected_flat):.1f} < {MIN_BIN_COUNT} tuples in some bin"
        )

    return CorrelationEstimate(
        order=hist.order,
        e=float(e),
        b=float(b),
        grid=hist.edges,
        values=values,
        stderr=stderr,
        low_statistics=low,
        n_samples=s,
    )


def correlation_estimate(
    samples: t.Sequence[SpectralPoints | np.ndarray],
    model: DensityModel,
    order: int,
    e: float,
    b: float,
    grid: t.Sequence[t.Sequence[float]],
    n_anchors: int = DEFAULT_ANCHOR_POINTS,
) -> CorrelationEstimate:
    """Histogram estimator of the rescaled n-point correlation near E, averaged over E' and samples.

    Params:
        samples (Sequence[SpectralPoints|np.ndarray]): Spectra of equal size N.
        model (DensityModel): Law providing rho(E).
        order (int): 1, 2 or 3.
        e (float): Bulk energy.
        b (float): Energy half-window for the E' average.
        grid (Sequence): `order` edge vectors (see `correlation_grid()`).
        n_anchors (int): Number of E' points.

    Returns:
        (CorrelationEstimate): `low_statistics` is set instead of failing on thin bins.

    """
    hist = correlation_histogram(samples, model, order, e, b, grid, n_anchors=n_anchors)

    return estimate_from_histogram(hist, e, b)
