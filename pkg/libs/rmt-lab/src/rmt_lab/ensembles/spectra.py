from __future__ import annotations

import typing as t

from rmt_lab.enums import EnsembleKind, SpectrumKind
from rmt_lab.exceptions import DomainError, NumericError

from .classes import EnsembleSpec, MatrixSample, SpectralPoints
from .constants import EIGEN_RESIDUAL_TOL, INTERLACING_TOL
from .sampling import sample

from loguru import logger as log
import numpy as np
import pandas as pd
import scipy.linalg

__all__ = [
    "spectrum",
    "minor_spectrum",
    "check_interlacing",
    "sample_spectra",
    "spectra_frame",
]


def _check_residual(residuals: np.ndarray, norm: float, seed: int) -> None:
    worst = float(np.max(residuals)) if residuals.size else 0.0
    if worst > EIGEN_RESIDUAL_TOL * max(norm, np.finfo(float).tiny):
        raise NumericError(
            f"Eigen-residual {worst:.3e} exceeds {EIGEN_RESIDUAL_TOL:g}*||H||={EIGEN_RESIDUAL_TOL * norm:.3e}",
            seed=seed,
        )


def _singular_values(a: np.ndarray, seed: int, check_residual: bool) -> np.ndarray:
    if a.shape[1] == 0:
        return np.empty(0)

    try:
        if check_residual:
            u, s, vh = scipy.linalg.svd(a, full_matrices=False)
            residuals = np.linalg.norm(a @ vh.conj().T - u * s, axis=0)
            _check_residual(residuals, float(s.max(initial=0.0)), seed)
        else:
            s = scipy.linalg.svdvals(a)
    except np.linalg.LinAlgError as exc:
        msg = f"({type(exc)}) SVD did not converge. Details: {exc}"
        log.error(msg)

        raise NumericError("SVD did not converge", seed=seed) from exc

    return np.sort(s, kind="stable")


def spectrum(sample: MatrixSample, check_residual: bool = True) -> SpectralPoints:
    """Ordered spectrum of a sample.

    Description:
        Wigner kinds return eigenvalues of H. The quaternion kind has every eigenvalue
        twice in its 2N x 2N form, every second sorted value is kept. Covariance kinds
        return the singular values of A (square roots of the eigenvalues of A*A).

    Params:
        sample (MatrixSample): The matrix.
        check_residual (bool): Verify ||Hv - lambda v|| <= 1e-10 ||H|| for every pair.

    Returns:
        (SpectralPoints): Sorted values, `spec` provenance attached.

    Raises:
        NumericError: Non-convergence or residual failure, carrying the sample seed.

    """
    spec = sample.spec

    if spec.kind.is_covariance:
        values = _singular_values(sample.data, sample.seed_used, check_residual)

        return SpectralPoints(values=values, kind=SpectrumKind.SINGULAR_VALUES, spec=spec)

    h = sample.data
    try:
        if check_residual:
            vals, vecs = scipy.linalg.eigh(h)
            residuals = np.linalg.norm(h @ vecs - vecs * vals, axis=0)
            _check_residual(residuals, float(np.max(np.abs(vals))), sample.seed_used)
        else:
            vals = scipy.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        msg = f"({type(exc)}) Eigensolver did not converge. Details: {exc}"
        log.error(msg)

        raise NumericError("Eigensolver did not converge", seed=sample.seed_used) from exc

    vals = np.sort(vals, kind="stable")
    if spec.kind is EnsembleKind.WIGNER_QUATERNION:
        vals = vals[0::2]

    return SpectralPoints(values=vals, kind=SpectrumKind.EIGENVALUES, spec=spec)


def minor_spectrum(sample: MatrixSample, drop_index: int) -> SpectralPoints:
    """Singular values of the M x (N-1) matrix obtained by deleting column `drop_index`.

    Params:
        sample (MatrixSample): Covariance sample.
        drop_index (int): 1-based column index, 1 <= drop_index <= N.

    Raises:
        DomainError: Non-covariance sample or index out of range.

    """
    if not sample.is_covariance:
        raise DomainError("minor_spectrum requires a covariance sample")

    n = sample.spec.n
    if not 1 <= int(drop_index) <= n:
        raise DomainError(f"drop_index must be in [1, {n}], got {drop_index}")

    b = np.delete(sample.data, int(drop_index) - 1, axis=1)
    values = _singular_values(b, sample.seed_used, check_residual=True)

    return SpectralPoints(values=values, kind=SpectrumKind.SINGULAR_VALUES, spec=sample.spec)


def check_interlacing(
    parent: SpectralPoints, minor: SpectralPoints, tol: float = INTERLACING_TOL
) -> bool:
    """Cauchy interlacing lambda_k(A*A) <= lambda_k(B*B) <= lambda_{k+1}(A*A).

    Params:
        parent (SpectralPoints): Singular values of A (N values).
        minor (SpectralPoints): Singular values of B (N-1 values).
        tol (float): Relative slack for the eigensolver error.

    """
    lam = parent.squared
    mu = minor.squared

    if mu.size != lam.size - 1:
        raise ValueError(
            f"Minor must have exactly one value fewer than parent ({lam.size}), got {mu.size}"
        )
    if mu.size == 0:
        return True

    slack = tol * max(float(lam[-1]), 1.0)

    return bool(np.all(lam[:-1] - slack <= mu) and np.all(mu <= lam[1:] + slack))


def sample_spectra(spec: EnsembleSpec, seeds: t.Iterable[int]) -> list[SpectralPoints]:
    return [spectrum(sample(spec.with_seed(int(seed)))) for seed in seeds]


def spectra_frame(points: t.Sequence[SpectralPoints], seeds: t.Sequence[int]) -> pd.DataFrame:
    """Long-format table `seed, k, value` (k is 1-based)."""
    if len(points) != len(seeds):
        raise ValueError(f"Got {len(points)} spectra for {len(seeds)} seeds")

    frames = [
        pd.DataFrame(
            {
                "seed": np.full(p.n, int(seed), dtype=np.uint64),
                "k": np.arange(1, p.n + 1),
                "value": p.values,
            }
        )
        for p, seed in zip(points, seeds)
    ]

    if not frames:
        return pd.DataFrame(columns=["seed", "k", "value"])

    return pd.concat(frames, ignore_index=True)
