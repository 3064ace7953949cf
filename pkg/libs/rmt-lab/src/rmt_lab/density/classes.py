from __future__ import annotations

from dataclasses import dataclass

from rmt_lab.enums import Law
from rmt_lab.exceptions import ConfigurationError, DomainError

import numpy as np

__all__ = ["DensityModel", "StieltjesPoint", "semicircle", "marchenko_pastur", "mp_singular"]


@dataclass(frozen=True)
class DensityModel:
    """A limiting spectral law.

    Params:
        law (Law): semicircle, marchenko-pastur (eigenvalues of A*A) or mp-singular
            (singular values of A).
        d (float|None): Dimension ratio N/M in (0, 1), MP laws only.

    """

    law: Law
    d: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "law", Law(self.law))

        if self.law is Law.SEMICIRCLE:
            if self.d is not None:
                raise ConfigurationError("density: semicircle law takes no d")
        else:
            if self.d is None or not 0 < float(self.d) < 1:
                raise ConfigurationError(
                    f"density: Marchenko-Pastur laws require 0<d<1, got d={self.d}"
                )
            object.__setattr__(self, "d", float(self.d))

    @property
    def mp_edges(self) -> tuple[float, float]:
        """(lambda_-, lambda_+) = ((1 - sqrt d)^2, (1 + sqrt d)^2)."""
        sd = np.sqrt(self.d)

        return (1.0 - sd) ** 2, (1.0 + sd) ** 2

    @property
    def support(self) -> tuple[float, float]:
        match self.law:
            case Law.SEMICIRCLE:
                return -2.0, 2.0
            case Law.MARCHENKO_PASTUR:
                return self.mp_edges
            case Law.MP_SINGULAR:
                lo, hi = self.mp_edges

                return float(np.sqrt(lo)), float(np.sqrt(hi))

    @property
    def lower(self) -> float:
        return self.support[0]

    @property
    def upper(self) -> float:
        return self.support[1]

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def in_open_support(self, e: float) -> bool:
        return bool(self.lower < e < self.upper)


def semicircle() -> DensityModel:
    return DensityModel(law=Law.SEMICIRCLE)


def marchenko_pastur(d: float) -> DensityModel:
    return DensityModel(law=Law.MARCHENKO_PASTUR, d=d)


def mp_singular(d: float) -> DensityModel:
    return DensityModel(law=Law.MP_SINGULAR, d=d)


@dataclass(frozen=True)
class StieltjesPoint:
    """A Stieltjes transform value m(z), Im z > 0."""

    z: complex
    value: complex

    def __post_init__(self):
        z = complex(self.z)
        if not z.imag > 0:
            raise DomainError(f"Stieltjes transforms are evaluated at Im z > 0, got z={z}")

        object.__setattr__(self, "z", z)
        object.__setattr__(self, "value", complex(self.value))

    @property
    def e(self) -> float:
        return self.z.real

    @property
    def eta(self) -> float:
        return self.z.imag
