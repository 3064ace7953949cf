from __future__ import annotations

import typing as t

from .classes import HamiltonianSpec, PseudoPotential
from .constants import BOUND_SLACK
from .hamiltonian import Points, _prepare, hessian_quadratic_form

import numpy as np

__all__ = [
    "interaction_form",
    "is_convex_bound_satisfied",
    "convex_bound_slack",
    "relaxation_bound_slack",
    "relaxation_hessian_bound_check",
]


def interaction_form(x: np.ndarray, v: np.ndarray) -> float:
    """(1/N) sum_{i<j} (v_i - v_j)^2 / (x_i - x_j)^2."""
    n = x.size
    iu = np.triu_indices(n, k=1)
    dv = v[iu[0]] - v[iu[1]]
    dx = x[iu[0]] - x[iu[1]]

    return float(np.sum(dv * dv / (dx * dx)) / n)


def convex_bound_slack(spec: HamiltonianSpec, x: Points, v: t.Sequence[float]) -> float:
    """<v, Hess H v> - (beta/N) sum_{i<j} (v_i - v_j)^2/(x_i - x_j)^2, relative to max(1, |rhs|)."""
    arr = _prepare(spec, x)
    v = np.asarray(v, dtype=float).reshape(-1)
    rhs = spec.beta * interaction_form(arr, v)
    lhs = hessian_quadratic_form(spec, arr, v)

    return (lhs - rhs) / max(1.0, abs(rhs))


def is_convex_bound_satisfied(spec: HamiltonianSpec, x: Points, v: t.Sequence[float]) -> bool:
    return convex_bound_slack(spec, x, v) >= -BOUND_SLACK


def relaxation_bound_slack(
    spec: HamiltonianSpec,
    pp: PseudoPotential,
    x: Points,
    v: t.Sequence[float],
    include_pseudo: bool = True,
    u_second_derivative: float | None = None,
) -> float:
    """<v, Hess(H + W) v> - ||v||^2/R^2 - (1/N) sum_{i<j}(v_i - v_j)^2/(x_i - x_j)^2, relative."""
    arr = _prepare(spec, x)
    v = np.asarray(v, dtype=float).reshape(-1)
    if pp.n != spec.n:
        raise ValueError(f"Pseudo-potential has n={pp.n}, spec has n={spec.n}")

    confinement = float(np.sum(v * v)) / pp.r**2
    lhs = hessian_quadratic_form(spec, arr, v, u_second_derivative=u_second_derivative)
    if include_pseudo:
        lhs += confinement
    rhs = confinement + interaction_form(arr, v)

    return (lhs - rhs) / max(1.0, abs(rhs))


def relaxation_hessian_bound_check(
    spec: HamiltonianSpec,
    pp: PseudoPotential,
    x: Points,
    v: t.Sequence[float],
    include_pseudo: bool = True,
    u_second_derivative: float | None = None,
) -> bool:
    """True iff <v, Hess(H + W) v> >= ||v||^2/R^2 + (1/N) sum_{i<j}(v_i - v_j)^2/(x_i - x_j)^2.

    Description:
        `include_pseudo=False` and `u_second_derivative` are test hooks that drop the
        confinement W or replace U''; with both the bound fails, which shows the W term
        is what carries it.

    Raises:
        SingularConfigurationError: Coincident points.

    """
    slack = relaxation_bound_slack(
        spec, pp, x, v, include_pseudo=include_pseudo, u_second_derivative=u_second_derivative
    )

    return bool(slack >= -BOUND_SLACK)
