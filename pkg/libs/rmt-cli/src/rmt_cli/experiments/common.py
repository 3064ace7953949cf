from __future__ import annotations

from dataclasses import replace
import typing as t

from rmt_lab.density import DensityModel, marchenko_pastur, mp_singular, semicircle
from rmt_lab.ensembles import EnsembleSpec, SpectralPoints, sample, spectrum
from rmt_lab.enums import EntryDistribution
from rmt_lab.exceptions import ConfigurationError

import numpy as np

__all__ = [
    "singular_value_law",
    "eigenvalue_law",
    "bulk_center",
    "require_covariance",
    "require_wigner",
    "reference_spec",
    "sample_points",
    "finite",
]


def singular_value_law(spec: EnsembleSpec) -> DensityModel:
    """Law of the spectral points of `spec`: semicircle, or mp-singular for covariance kinds."""
    return mp_singular(spec.d) if spec.kind.is_covariance else semicircle()


def eigenvalue_law(spec: EnsembleSpec) -> DensityModel:
    return marchenko_pastur(spec.d) if spec.kind.is_covariance else semicircle()


def bulk_center(model: DensityModel) -> float:
    lo, hi = model.support

    return 0.5 * (lo + hi)


def require_covariance(spec: EnsembleSpec, experiment: str) -> None:
    if not spec.kind.is_covariance:
        raise ConfigurationError(f"{experiment}: needs a covariance ensemble, got {spec.kind.value}")


def require_wigner(spec: EnsembleSpec, experiment: str) -> None:
    if spec.kind.is_covariance:
        raise ConfigurationError(f"{experiment}: needs a Wigner ensemble, got {spec.kind.value}")


def reference_spec(spec: EnsembleSpec, seed: int) -> EnsembleSpec:
    """Gaussian-entry ensemble of the same symmetry class, drawn with `seed`."""
    return replace(spec, entry_dist=EntryDistribution.GAUSSIAN, seed=seed)


def sample_points(spec: EnsembleSpec) -> SpectralPoints:
    return spectrum(sample(spec))


def finite(value: t.Any) -> float | None:
    """JSON-friendly float (NaN and inf become None)."""
    value = float(value)

    return value if np.isfinite(value) else None
