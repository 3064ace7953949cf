from __future__ import annotations

import numpy as np

__all__ = [
    "EDGE_FRACTION",
    "DEFAULT_WINDOW_EXPONENT",
    "MIN_BIN_COUNT",
    "DEFAULT_ANCHOR_POINTS",
    "DEFAULT_S_GRID",
]

## Statistics are only offered where rho(E) >= EDGE_FRACTION * max rho
EDGE_FRACTION: float = 0.05
## ell_N = N^(-delta)
DEFAULT_WINDOW_EXPONENT: float = 0.1
MIN_BIN_COUNT: int = 20
## Number of E' anchors on [E - b, E + b]
DEFAULT_ANCHOR_POINTS: int = 64
DEFAULT_S_GRID: np.ndarray = np.linspace(0.0, 4.0, 81)
