from __future__ import annotations

__all__ = [
    "EIGEN_RESIDUAL_TOL",
    "INTERLACING_TOL",
    "OFFDIAG_VARIANCE",
    "DIAG_VARIANCE",
    "COMPONENT_VARIANCE",
]

## Eigenpair residual ||Hv - lambda v|| relative to ||H||
EIGEN_RESIDUAL_TOL: float = 1e-10
INTERLACING_TOL: float = 1e-10

## Unscaled entry variances before the 1/sqrt(N) (Wigner) or 1/sqrt(M) (covariance) factor.
#  Off-diagonal and diagonal totals per kind.
OFFDIAG_VARIANCE: dict[str, float] = {
    "wigner-symmetric": 1.0,
    "wigner-hermitian": 1.0,
    "wigner-quaternion": 1.0,
    "covariance-real": 1.0,
    "covariance-complex": 1.0,
}
DIAG_VARIANCE: dict[str, float] = {
    "wigner-symmetric": 2.0,
    "wigner-hermitian": 1.0,
    "wigner-quaternion": 0.5,
}
## Variance of each real component of a complex/quaternion entry
COMPONENT_VARIANCE: dict[str, float] = {
    "wigner-symmetric": 1.0,
    "wigner-hermitian": 0.5,
    "wigner-quaternion": 0.25,
    "covariance-real": 1.0,
    "covariance-complex": 0.5,
}
