from __future__ import annotations

from dataclasses import dataclass

from rmt_lab.enums import HamiltonianKind
from rmt_lab.exceptions import ConfigurationError

from loguru import logger as log
import numpy as np

__all__ = ["HamiltonianSpec", "PseudoPotential"]


@dataclass(frozen=True)
class HamiltonianSpec:
    """Equilibrium measure exp(-N H(x)) of a beta-ensemble.

    Description:
        wigner: H = beta [sum x^2/4 - (1/N) sum_{i<j} log|x_j - x_i|].
        covariance (singular values): H = beta [sum x^2/(2d) - (1/N) sum_{i<j} log|x_j^2 - x_i^2|
        - (c_n/N) sum log x_i] with c_n = N(1/d - 1) + 1 - 1/beta.

    """

    kind: HamiltonianKind
    beta: float
    n: int
    d: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", HamiltonianKind(self.kind))

        if not float(self.beta) >= 1:
            raise ConfigurationError(f"hamiltonian: beta must be >= 1, got {self.beta}")
        if int(self.n) < 1:
            raise ConfigurationError(f"hamiltonian: n must be positive, got {self.n}")

        if self.kind is HamiltonianKind.COVARIANCE:
            if self.d is None or not 0 < float(self.d) < 1:
                raise ConfigurationError(
                    f"hamiltonian: covariance kind requires 0<d<1, got d={self.d}"
                )
            if self.c_n < 1:
                log.debug(f"c_n={self.c_n:.4f} < 1 for n={self.n}, d={self.d}")

    @property
    def c_n(self) -> float:
        """Coefficient of sum log x_i in the covariance Hamiltonian (0 for wigner)."""
        if self.kind is not HamiltonianKind.COVARIANCE:
            return 0.0

        return self.n * (1.0 / self.d - 1.0) + 1.0 - 1.0 / self.beta

    @property
    def u_second_derivative(self) -> float:
        """U'' of the confining potential: 1/2 (wigner) or 1/d (covariance)."""
        return 0.5 if self.kind is HamiltonianKind.WIGNER else 1.0 / self.d


@dataclass(frozen=True, eq=False)
class PseudoPotential:
    """W(x) = sum_j (x_j - gamma_j)^2 / (2R^2) around the classical locations."""

    gamma: np.ndarray
    r: float

    def __post_init__(self):
        gamma = np.array(self.gamma, dtype=float).reshape(-1)

        if not float(self.r) > 0:
            raise ConfigurationError(f"pseudo-potential: r must be positive, got {self.r}")
        if gamma.size > 1 and np.any(np.diff(gamma) <= 0):
            raise ConfigurationError("pseudo-potential: gamma must be strictly increasing")

        gamma.setflags(write=False)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "r", float(self.r))

    @property
    def n(self) -> int:
        return int(self.gamma.size)
