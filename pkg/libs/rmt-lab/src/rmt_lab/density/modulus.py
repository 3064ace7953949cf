from __future__ import annotations

from functools import lru_cache

from rmt_lab.exceptions import DomainError

from .classes import DensityModel
from .constants import MODULUS_GRID_SIZE, MODULUS_SAFETY, MODULUS_SLACK
from .laws import _edge_factor, cdf, quantile

from loguru import logger as log
import numpy as np

__all__ = ["inverse_modulus_constant", "inverse_modulus_bound_check"]


@lru_cache(maxsize=64)
def inverse_modulus_constant(model: DensityModel) -> float:
    """Calibrated C for |t - n^{-1}(s)| <= C |n(t) - s|^{2/3}.

    Description:
        C is fitted numerically, not taken from a closed form such as
        2 (pi d)^{2/3} over an edge-slope factor. Two candidates are computed:

        - the edge limits: near an edge rho ~ k sqrt(x), so n ~ (2/3) k x^{3/2} and
          the ratio tends to (3/(2k))^{2/3};
        - the sup of |n^{-1}(p) - n^{-1}(p')| / |p - p'|^{2/3} over all pairs of a
          `MODULUS_GRID_SIZE`-point quantile grid.

        The larger one is scaled by `MODULUS_SAFETY` (1.5) to cover pairs between
        grid points. The value is cached per model.

    Returns:
        (float): The calibrated constant.

    """
    lo, hi = model.support
    h = _edge_factor(model)
    edge_constants = [
        (3.0 / (2.0 * h(lo) * np.sqrt(hi - lo))) ** (2.0 / 3.0),
        (3.0 / (2.0 * h(hi) * np.sqrt(hi - lo))) ** (2.0 / 3.0),
    ]

    p = np.linspace(0.0, 1.0, MODULUS_GRID_SIZE)
    q = np.array([quantile(model, float(v)) for v in p])
    dp = np.abs(p[:, None] - p[None, :])
    dq = np.abs(q[:, None] - q[None, :])
    off_diag = dp > 0
    grid_sup = float(np.max(dq[off_diag] / dp[off_diag] ** (2.0 / 3.0)))

    c = MODULUS_SAFETY * max(grid_sup, *edge_constants)
    log.debug(f"Inverse-modulus constant for {model}: grid={grid_sup:.4f} edges={edge_constants} C={c:.4f}")

    return float(c)


def inverse_modulus_bound_check(model: DensityModel, t: float, s: float) -> bool:
    """True iff |t - n^{-1}(s)| <= C |n(t) - s|^{2/3} (+1e-10 slack for the quantile solver).

    Raises:
        DomainError: `t` outside the open support or `s` outside [0, 1].

    """
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"s must be in [0, 1], got {s}")
    if not model.in_open_support(t):
        raise DomainError(f"t={t} is not inside the open support {model.support}")

    c = inverse_modulus_constant(model)
    lhs = abs(t - quantile(model, s))
    rhs = c * abs(cdf(model, t) - s) ** (2.0 / 3.0) + MODULUS_SLACK

    return bool(lhs <= rhs)
