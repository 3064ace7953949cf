from __future__ import annotations

__all__ = ["COLLISION_FLOOR", "MAX_HALVINGS", "GAP_STEP_DIVISOR", "TIME_TOL"]

COLLISION_FLOOR: float = 1e-8
MAX_HALVINGS: int = 40
## Collision-safe step bound: dt <= (min gap)^2 * N / GAP_STEP_DIVISOR
GAP_STEP_DIVISOR: float = 10.0
TIME_TOL: float = 1e-14
