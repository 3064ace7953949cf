from __future__ import annotations

__all__ = [
    "DEFAULT_HALF_WIDTH",
    "DEFAULT_GRID_POINTS",
    "MASS_TOL",
    "OU_MAX_DT",
    "OU_MIN_STEPS",
    "MAX_REVERSE_TIME",
    "CUTOFF_EXPONENT",
    "CUTOFF_RADIUS",
    "MOMENT_TOL",
    "GAP_CENTER",
    "GAP_CELLS",
    "GAP_DT",
    "GAP_RESOLUTION",
    "GAP_FIRST_CELL_MASS",
    "ENTROPY_FLOOR",
    "ENTROPY_FIT_FRACTION",
]

DEFAULT_HALF_WIDTH: float = 8.0
DEFAULT_GRID_POINTS: int = 4096
MASS_TOL: float = 1e-8

## Crank-Nicolson step for the OU flow: dt = t / max(ceil(t / OU_MAX_DT), OU_MIN_STEPS)
OU_MAX_DT: float = 5e-3
OU_MIN_STEPS: int = 16

MAX_REVERSE_TIME: float = 0.1
## theta(x) = theta_0(t^CUTOFF_EXPONENT * x / CUTOFF_RADIUS)
CUTOFF_EXPONENT: float = 0.05
CUTOFF_RADIUS: float = 3.0
## Mean/dilation adjustments below this are skipped
MOMENT_TOL: float = 1e-12

GAP_CENTER: float = 2.0
GAP_CELLS: int = 2000
GAP_DT: float = 1e-3
## Cell width must not exceed min(R, g) / GAP_RESOLUTION
GAP_RESOLUTION: float = 20.0
GAP_FIRST_CELL_MASS: float = 1e-3

## Entropy decay rates are fitted on ENTROPY_FLOOR < S < ENTROPY_FIT_FRACTION * S(0)
ENTROPY_FLOOR: float = 1e-10
ENTROPY_FIT_FRACTION: float = 1e-2
