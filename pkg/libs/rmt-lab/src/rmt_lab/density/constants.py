from __future__ import annotations

__all__ = [
    "CDF_EPSABS",
    "CDF_EPSREL",
    "QUAD_LIMIT",
    "BISECTION_XTOL",
    "BISECTION_MAXITER",
    "REFERENCE_POINT",
    "DELTA_MAX",
    "CONTINUATION_STEPS",
    "MODULUS_GRID_SIZE",
    "MODULUS_SAFETY",
    "MODULUS_SLACK",
]

CDF_EPSABS: float = 1e-13
CDF_EPSREL: float = 1e-12
QUAD_LIMIT: int = 200

BISECTION_XTOL: float = 1e-12
BISECTION_MAXITER: int = 200

## Anchor of the root continuation for the perturbed self-consistent equation
REFERENCE_POINT: complex = 10 + 5j
DELTA_MAX: float = 0.1
CONTINUATION_STEPS: int = 256

## Calibration of the inverse-modulus constant
MODULUS_GRID_SIZE: int = 101
MODULUS_SAFETY: float = 1.5
## Absorbs the bisection tolerance when s == cdf(t)
MODULUS_SLACK: float = 1e-10
