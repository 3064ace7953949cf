from __future__ import annotations

__all__ = ["SINGULAR_GAP", "BOUND_SLACK"]

## Configurations with |x_i - x_j| below this are rejected
SINGULAR_GAP: float = 1e-12
## Floating-point slack of the Hessian lower-bound checks, relative to max(1, |rhs|)
BOUND_SLACK: float = 1e-12
