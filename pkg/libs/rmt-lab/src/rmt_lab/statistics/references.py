from __future__ import annotations

import typing as t

from rmt_lab.density import semicircle
from rmt_lab.ensembles import EnsembleSpec, sample_spectra
from rmt_lab.enums import EnsembleKind

from .gaps import gap_statistics, pooled_gaps

import numpy as np
from scipy import integrate

__all__ = [
    "sine_kernel_pair_correlation",
    "wigner_surmise",
    "wigner_surmise_cdf",
    "reference_gaps",
    "gaussian_kind_for_beta",
]

## (a_beta, b_beta) in p(s) = a s^beta exp(-b s^2)
_SURMISE_CONSTANTS: dict[int, tuple[float, float]] = {
    1: (np.pi / 2.0, np.pi / 4.0),
    2: (32.0 / np.pi**2, 4.0 / np.pi),
    4: (2.0**18 / (3.0**6 * np.pi**3), 64.0 / (9.0 * np.pi)),
}

_GAUSSIAN_KINDS: dict[int, EnsembleKind] = {
    1: EnsembleKind.WIGNER_SYMMETRIC,
    2: EnsembleKind.WIGNER_HERMITIAN,
    4: EnsembleKind.WIGNER_QUATERNION,
}


def sine_kernel_pair_correlation(alpha: t.Union[float, np.ndarray]) -> t.Union[float, np.ndarray]:
    """1 - (sin(pi a) / (pi a))^2."""
    val = 1.0 - np.sinc(np.asarray(alpha, dtype=float)) ** 2

    return float(val) if np.ndim(val) == 0 else val


def _surmise_constants(beta: int) -> tuple[float, float]:
    try:
        return _SURMISE_CONSTANTS[int(beta)]
    except KeyError:
        raise ValueError(f"Wigner surmise is tabulated for beta in (1, 2, 4), got {beta}")


def wigner_surmise(s: t.Union[float, np.ndarray], beta: int) -> t.Union[float, np.ndarray]:
    """Gap density of the 2x2 Gaussian ensemble, normalized to mean spacing 1."""
    a, b = _surmise_constants(beta)
    s = np.asarray(s, dtype=float)
    val = np.where(s > 0, a * np.clip(s, 0.0, None) ** int(beta) * np.exp(-b * s * s), 0.0)

    return float(val) if np.ndim(val) == 0 else val


def wigner_surmise_cdf(s: t.Union[float, np.ndarray], beta: int) -> t.Union[float, np.ndarray]:
    _surmise_constants(beta)
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))

    if int(beta) == 1:
        out = 1.0 - np.exp(-np.pi * np.clip(s_arr, 0.0, None) ** 2 / 4.0)
    else:
        out = np.array(
            [
                integrate.quad(wigner_surmise, 0.0, v, args=(beta,))[0] if v > 0 else 0.0
                for v in s_arr
            ]
        )

    return float(out[0]) if np.ndim(s) == 0 else out


def reference_gaps(
    kind: EnsembleKind, n: int, seeds: t.Iterable[int], e: float, ell: float
) -> np.ndarray:
    """Pooled rescaled bulk gaps of a Gaussian Wigner ensemble (empirical beta = 1, 4 references)."""
    kind = EnsembleKind(kind)
    if kind.is_covariance:
        raise ValueError(f"Reference gaps are drawn from Wigner kinds, got {kind.value}")

    spec = EnsembleSpec(kind=kind, n=n)
    model = semicircle()
    stats = [gap_statistics(p, model, e, ell) for p in sample_spectra(spec, seeds)]

    return pooled_gaps(stats)


def gaussian_kind_for_beta(beta: int) -> EnsembleKind:
    return _GAUSSIAN_KINDS[int(beta)]
