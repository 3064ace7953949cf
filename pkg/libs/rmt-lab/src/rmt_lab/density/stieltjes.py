from __future__ import annotations

import typing as t

from rmt_lab.ensembles import SpectralPoints
from rmt_lab.enums import Law
from rmt_lab.exceptions import DomainError

from .classes import DensityModel, StieltjesPoint
from .constants import CONTINUATION_STEPS, DELTA_MAX, REFERENCE_POINT
from .laws import kappa

import numpy as np

__all__ = [
    "stieltjes_mw",
    "self_consistent_residual",
    "perturbed_edges",
    "perturbed_roots",
    "root_gap",
    "fit_root_gap_constant",
    "empirical_stieltjes",
    "interlacing_error",
]


def _require_upper_half_plane(z: complex) -> complex:
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"Evaluation requires Im z > 0, got z={z}")

    return z


def _mp_root_pair(d: float, z: np.ndarray, delta: complex = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Both roots of S + 1/(z - (1-d) + z d S) = delta, principal square root.

    Description:
        S_pm = (1 - d - z +- i(1 + d delta) sqrt((l_+ - z)(z - l_-)))/(2 d z) + delta/2 with
        the perturbed edges l_pm. At delta = 0 the '+' root is m_W(z).

    """
    lo, hi = perturbed_edges_d(d, delta)
    root = 1j * (1.0 + d * delta) * np.sqrt((hi - z) * (z - lo))
    base = 1.0 - d - z
    denom = 2.0 * d * z

    return (base + root) / denom + delta / 2.0, (base - root) / denom + delta / 2.0


def perturbed_edges_d(d: float, delta: complex) -> tuple[complex, complex]:
    sd = np.sqrt(d)
    if delta == 0:
        return complex((1.0 - sd) ** 2), complex((1.0 + sd) ** 2)

    s = np.sqrt(complex(1.0 + delta * (d - d * d)))
    scale = 1.0 + delta * d
    lo = (s - sd) / scale
    hi = (s + sd) / scale

    return lo * lo, hi * hi


def perturbed_edges(model: DensityModel, delta: complex) -> tuple[complex, complex]:
    """Edges of the perturbed self-consistent equation, equal to (lambda_-, lambda_+) at delta=0."""
    _require_mp(model)

    return perturbed_edges_d(model.d, delta)


def _require_mp(model: DensityModel) -> None:
    if model.law is not Law.MARCHENKO_PASTUR:
        raise DomainError(
            f"Only the marchenko-pastur law has this self-consistent equation, got {model.law.value}"
        )


def stieltjes_mw(model: DensityModel, z: complex) -> StieltjesPoint:
    """Closed-form Stieltjes transform m(z) = int rho(x)/(x - z) dx.

    Description:
        Marchenko-Pastur: m_W(z) = (1 - d - z + i sqrt((z - l_-)(l_+ - z)))/(2dz).
        Semicircle: m(z) = (-z + i sqrt((z + 2)(2 - z)))/2, evaluated as -2/(z + i sqrt(...)).
        The square root is principal (cut on the negative real axis). Written as a
        product over the edges the argument never meets the cut in the upper half-plane.

    Raises:
        DomainError: Im z <= 0, or the mp-singular law.

    """
    z = _require_upper_half_plane(z)

    match model.law:
        case Law.SEMICIRCLE:
            ## Reciprocal of the other root; avoids cancellation for large |z|
            value = -2.0 / (z + 1j * np.sqrt((z + 2.0) * (2.0 - z)))
        case Law.MARCHENKO_PASTUR:
            value, _ = _mp_root_pair(model.d, np.asarray(z))
        case _:
            raise DomainError("The mp-singular law has no closed-form Stieltjes transform here")

    return StieltjesPoint(z=z, value=complex(value))


def self_consistent_residual(
    model: DensityModel, z: complex, m: complex, delta: complex = 0.0
) -> complex:
    """m + 1/(z - (1-d) + z d m) - delta  (semicircle: m + 1/(z + m) - delta)."""
    z = complex(z)
    m = complex(m)

    match model.law:
        case Law.SEMICIRCLE:
            return m + 1.0 / (z + m) - delta
        case Law.MARCHENKO_PASTUR:
            return m + 1.0 / (z - (1.0 - model.d) + z * model.d * m) - delta
        case _:
            raise DomainError("The mp-singular law has no self-consistent equation here")


def perturbed_roots(
    model: DensityModel,
    z: complex,
    delta: complex,
    steps: int = CONTINUATION_STEPS,
) -> tuple[complex, complex]:
    """Roots (S_+, S_-) of S + 1/(z - (1-d) + z d S) = delta.

    Description:
        S_+ is the root with positive imaginary part at the reference point 10+5i,
        followed continuously along the straight segment from the reference point to z
        (nearest-root tracking over `steps` points).

    Params:
        model (DensityModel): Marchenko-Pastur law.
        z (complex): Im z > 0.
        delta (complex): Perturbation, |delta| <= 0.1.

    Returns:
        (tuple[complex, complex]): `(S_plus, S_minus)`.

    Raises:
        DomainError: Wrong law, Im z <= 0 or |delta| > 0.1.

    """
    _require_mp(model)
    z = _require_upper_half_plane(z)
    if abs(delta) > DELTA_MAX:
        raise DomainError(f"|delta|={abs(delta):.3g} exceeds {DELTA_MAX}; the root expansion needs small delta")

    path = REFERENCE_POINT + (z - REFERENCE_POINT) * np.linspace(0.0, 1.0, int(steps) + 1)
    path[-1] = z
    plus, minus = _mp_root_pair(model.d, path, delta)

    if plus[0].imag >= minus[0].imag:
        current = plus[0]
    else:
        current = minus[0]

    for k in range(1, path.size):
        if abs(plus[k] - current) <= abs(minus[k] - current):
            current, other = plus[k], minus[k]
        else:
            current, other = minus[k], plus[k]

    if path.size == 1:
        other = minus[0] if current == plus[0] else plus[0]

    return complex(current), complex(other)


def root_gap(model: DensityModel, z: complex) -> float:
    """|S_+ - S_-| of the unperturbed equation."""
    s_plus, s_minus = perturbed_roots(model, z, 0.0)

    return abs(s_plus - s_minus)


def fit_root_gap_constant(model: DensityModel, zs: t.Iterable[complex]) -> float:
    """Largest c with |S_+ - S_-| >= c * sqrt(kappa(E) + eta) on every z of the grid."""
    ratios = [
        root_gap(model, z) / np.sqrt(kappa(model, complex(z).real) + complex(z).imag)
        for z in zs
    ]
    if not ratios:
        raise ValueError("Empty z grid")

    return float(min(ratios))


def empirical_stieltjes(points: SpectralPoints | np.ndarray, z: complex) -> StieltjesPoint:
    """m_N(z) = (1/N) sum_j 1/(x_j - z).

    Description:
        For covariance spectra pass the eigenvalues of A*A (`points.squared`).

    """
    z = _require_upper_half_plane(z)
    values = points.values if isinstance(points, SpectralPoints) else np.asarray(points, dtype=float)
    if values.size == 0:
        raise DomainError("Empirical Stieltjes transform of an empty spectrum")

    return StieltjesPoint(z=z, value=complex(np.mean(1.0 / (values - z))))


def interlacing_error(parent: np.ndarray, minor: np.ndarray, z: complex) -> float:
    """eta * |(N-1) m_{N-1}(z) - N m_N(z)| for interlacing eigenvalue sequences.

    Description:
        Interlacing bounds the difference of the unnormalized transforms by pi/eta,
        so the returned value never exceeds pi.

    """
    z = _require_upper_half_plane(z)
    parent = np.asarray(parent, dtype=float)
    minor = np.asarray(minor, dtype=float)
    diff = np.sum(1.0 / (minor - z)) - np.sum(1.0 / (parent - z))

    return float(z.imag * abs(diff))
