from __future__ import annotations

import typing as t

import numpy as np
from scipy import stats

__all__ = ["ks_distance"]


def ks_distance(
    a: t.Sequence[float], b: t.Union[t.Sequence[float], t.Callable[[np.ndarray], np.ndarray]]
) -> float:
    """Sup-norm distance between the empirical CDF of `a` and `b`.

    Params:
        a (Sequence[float]): Sample.
        b (Sequence[float]|Callable): Second sample, or a reference CDF.

    Raises:
        ValueError: Either sample is empty.

    """
    a = np.asarray(a, dtype=float).reshape(-1)
    if a.size == 0:
        raise ValueError("ks_distance() needs a non-empty sample")

    if callable(b):
        return float(stats.kstest(a, b).statistic)

    b = np.asarray(b, dtype=float).reshape(-1)
    if b.size == 0:
        raise ValueError("ks_distance() needs a non-empty reference sample")

    return float(stats.ks_2samp(a, b).statistic)
