from __future__ import annotations

import typing as t

from rmt_lab.ensembles import SpectralPoints

from loguru import logger as log
import numpy as np

__all__ = ["observable_g", "counting_tail"]


def _values(points: SpectralPoints | np.ndarray) -> np.ndarray:
    if isinstance(points, SpectralPoints):
        return points.values

    return np.sort(np.asarray(points, dtype=float).reshape(-1))


def observable_g(
    points: SpectralPoints | np.ndarray,
    indices: t.Iterable[int],
    offsets: t.Sequence[int],
    g: t.Callable[[np.ndarray], float],
) -> float:
    """(1/N) sum_{i in J} G(N(x_i - x_{i+m_1}), ..., N(x_i - x_{i+m_n})).

    Description:
        Indices are 1-based. A term whose i + m_n exceeds N contributes 0.

    Params:
        points (SpectralPoints|np.ndarray): Configuration x_1 <= ... <= x_N.
        indices (Iterable[int]): The set J.
        offsets (Sequence[int]): Strictly increasing positive offsets m.
        g (Callable): Bounded function of the offset vector.

    """
    x = _values(points)
    n = x.size
    offsets = np.asarray(offsets, dtype=int).reshape(-1)
    if offsets.size == 0 or offsets[0] < 1 or np.any(np.diff(offsets) <= 0):
        raise ValueError(f"Offsets must be strictly increasing positive integers, got {offsets}")

    total = 0.0
    for i in sorted(set(int(i) for i in indices)):
        if i < 1:
            raise ValueError(f"Indices are 1-based, got {i}")
        if i + offsets[-1] > n:
            continue
        args = n * (x[i - 1] - x[i - 1 + offsets])
        total += float(g(args))

    return total / n


def counting_tail(
    samples: t.Sequence[SpectralPoints | np.ndarray],
    interval: tuple[float, float],
    k_grid: t.Sequence[float],
) -> np.ndarray:
    """Empirical P(#{x_j in I} >= K N |I|) for every K in `k_grid`."""
    lo, hi = (float(v) for v in interval)
    if not hi > lo:
        raise ValueError(f"Interval must have positive length, got {interval}")
    if not samples:
        raise ValueError("No samples")

    k_grid = np.asarray(k_grid, dtype=float)
    width = hi - lo
    exceed = np.zeros(k_grid.size)

    for points in samples:
        x = _values(points)
        n = x.size
        if width < 1.0 / n:
            log.debug(f"Interval length {width:.3e} is below the spacing scale 1/N={1 / n:.3e}")
        count = np.searchsorted(x, hi, side="right") - np.searchsorted(x, lo, side="left")
        exceed += count >= k_grid * n * width

    return exceed / len(samples)
