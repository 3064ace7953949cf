from __future__ import annotations

from functools import lru_cache
import typing as t

from rmt_lab.enums import Law

from .classes import DensityModel
from .constants import (
    BISECTION_MAXITER,
    BISECTION_XTOL,
    CDF_EPSABS,
    CDF_EPSREL,
    QUAD_LIMIT,
)

from loguru import logger as log
import numpy as np
import pandas as pd
from scipy import integrate, optimize

__all__ = [
    "rho",
    "cdf",
    "total_mass",
    "quantile",
    "classical_locations",
    "kappa",
    "density_peak",
    "density_frame",
]

ArrayLike = t.Union[float, np.ndarray, t.Sequence[float]]


def _rho_mp(d: float, x: np.ndarray) -> np.ndarray:
    sd = np.sqrt(d)
    lo, hi = (1.0 - sd) ** 2, (1.0 + sd) ** 2
    inside = (x > lo) & (x < hi)
    safe_x = np.where(inside, x, 1.0)
    val = np.sqrt(np.clip((hi - safe_x) * (safe_x - lo), 0.0, None)) / (2.0 * np.pi * d * safe_x)

    return np.where(inside, val, 0.0)


def rho(model: DensityModel, e: ArrayLike) -> t.Union[float, np.ndarray]:
    """Closed-form density, exactly 0 off the support.

    Params:
        model (DensityModel): The law.
        e (float|np.ndarray): Evaluation point(s).

    Returns:
        (float|np.ndarray): rho(e), scalar in scalar out.

    """
    x = np.asarray(e, dtype=float)

    match model.law:
        case Law.SEMICIRCLE:
            val = np.sqrt(np.clip(4.0 - x * x, 0.0, None)) / (2.0 * np.pi)
            val = np.where(np.abs(x) < 2.0, val, 0.0)
        case Law.MARCHENKO_PASTUR:
            val = _rho_mp(model.d, x)
        case Law.MP_SINGULAR:
            ## Density of sqrt(lambda): 2x * rho_W(x^2)
            val = np.where(x > 0, 2.0 * x * _rho_mp(model.d, x * x), 0.0)

    return float(val) if np.ndim(val) == 0 else val


def _edge_factor(model: DensityModel) -> t.Callable[[float], float]:
    """Smooth h with rho(x) = h(x) * sqrt(x - lower) * sqrt(upper - x) on the support."""
    lo, hi = model.support

    match model.law:
        case Law.SEMICIRCLE:
            return lambda x: 1.0 / (2.0 * np.pi)
        case Law.MARCHENKO_PASTUR:
            d = model.d

            return lambda x: 1.0 / (2.0 * np.pi * d * x)
        case Law.MP_SINGULAR:
            d = model.d

            return lambda x: np.sqrt((hi + x) * (x + lo)) / (np.pi * d * x)


def _quad(func, a: float, b: float, wvar: tuple[float, float]) -> float:
    value, abserr = integrate.quad(
        func,
        a,
        b,
        weight="alg",
        wvar=wvar,
        epsabs=CDF_EPSABS,
        epsrel=CDF_EPSREL,
        limit=QUAD_LIMIT,
    )
    if abserr > 1e-10:
        log.warning(f"Quadrature error estimate {abserr:.2e} on [{a}, {b}]")

    return value


def _cdf_scalar(model: DensityModel, e: float) -> float:
    lo, hi = model.support
    if e <= lo:
        return 0.0
    if e >= hi:
        return 1.0

    h = _edge_factor(model)
    ## Integrate from the nearer edge so the square-root singularity sits in the weight
    if e <= 0.5 * (lo + hi):
        value = _quad(lambda x: h(x) * np.sqrt(hi - x), lo, e, wvar=(0.5, 0.0))
    else:
        value = 1.0 - _quad(lambda x: h(x) * np.sqrt(x - lo), e, hi, wvar=(0.0, 0.5))

    return float(min(max(value, 0.0), 1.0))


def cdf(model: DensityModel, e: ArrayLike) -> t.Union[float, np.ndarray]:
    """Integrated density n(e) = int_{-inf}^{e} rho.

    Description:
        Adaptive Gauss-Kronrod quadrature with an algebraic end-point weight that absorbs
        the square-root vanishing at the nearer support edge, absolute error <= 1e-10.

    """
    x = np.asarray(e, dtype=float)
    if x.ndim == 0:
        return _cdf_scalar(model, float(x))

    return np.array([_cdf_scalar(model, float(v)) for v in x.ravel()]).reshape(x.shape)


def total_mass(model: DensityModel) -> float:
    """int rho over the whole support, computed with both end-point weights."""
    lo, hi = model.support

    return _quad(_edge_factor(model), lo, hi, wvar=(0.5, 0.5))


def quantile(model: DensityModel, p: float) -> float:
    """Inverse of `cdf` by bisection (200-iteration cap, 1e-12 in position)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Probability must be in [0, 1], got {p}")

    lo, hi = model.support
    if p == 0.0:
        return float(lo)
    if p == 1.0:
        return float(hi)

    return float(
        optimize.bisect(
            lambda x: _cdf_scalar(model, x) - p,
            lo,
            hi,
            xtol=BISECTION_XTOL,
            maxiter=BISECTION_MAXITER,
        )
    )


@lru_cache(maxsize=64)
def _classical_locations(model: DensityModel, n: int) -> tuple[float, ...]:
    log.debug(f"Computing {n} classical locations for {model}")

    return tuple(quantile(model, j / n) for j in range(1, n)) + (float(model.upper),)


def classical_locations(model: DensityModel, n: int) -> np.ndarray:
    """gamma_j solving n * cdf(gamma_j) = j for j = 1..n (gamma_n is the upper edge).

    Params:
        model (DensityModel): The law.
        n (int): Number of locations, n >= 1.

    Returns:
        (np.ndarray): Increasing vector of length n.

    """
    if int(n) < 1:
        raise ValueError(f"n must be a positive integer, got {n}")

    return np.array(_classical_locations(model, int(n)))


def kappa(model: DensityModel, e: float) -> float:
    """Distance-to-edge factor |(E - lower)(E - upper)|."""
    lo, hi = model.support

    return abs((e - lo) * (e - hi))


@lru_cache(maxsize=64)
def density_peak(model: DensityModel) -> float:
    """max rho over the support."""
    lo, hi = model.support
    res = optimize.minimize_scalar(
        lambda x: -rho(model, x), bounds=(lo, hi), method="bounded", options={"xatol": 1e-10}
    )

    return float(-res.fun)


def density_frame(model: DensityModel, grid: ArrayLike) -> pd.DataFrame:
    """Tabulate `x, rho, cdf` on a caller-supplied grid."""
    x = np.asarray(grid, dtype=float).ravel()

    return pd.DataFrame({"x": x, "rho": rho(model, x), "cdf": cdf(model, x)})
