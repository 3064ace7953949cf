from __future__ import annotations

from dataclasses import replace

from rmt_lab.enums import EnsembleKind, EntryDistribution
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.utils import derive_rng

from .classes import EnsembleSpec, MatrixSample
from .constants import COMPONENT_VARIANCE, DIAG_VARIANCE

from loguru import logger as log
import numpy as np

__all__ = ["draw_entries", "sample", "ou_interpolate"]


def draw_entries(
    rng: np.random.Generator,
    dist: EntryDistribution,
    shape: tuple[int, ...],
    variance: float,
) -> np.ndarray:
    """Draw centered i.i.d. reals with exactly `variance`.

    Params:
        rng (np.random.Generator): Source stream.
        dist (EntryDistribution): gaussian, rademacher (+-sqrt(v)) or uniform on +-sqrt(3v).
        shape (tuple[int, ...]): Output shape.
        variance (float): Target variance.

    Returns:
        (np.ndarray): Float array of `shape`.

    """
    scale = np.sqrt(variance)

    match EntryDistribution(dist):
        case EntryDistribution.GAUSSIAN:
            return rng.standard_normal(shape) * scale
        case EntryDistribution.RADEMACHER:
            return (2.0 * rng.integers(0, 2, size=shape) - 1.0) * scale
        case EntryDistribution.UNIFORM:
            return rng.uniform(-1.0, 1.0, size=shape) * (np.sqrt(3.0) * scale)


def _strict_upper(values: np.ndarray, n: int) -> np.ndarray:
    """Scatter n(n-1)/2 draws into the strict upper triangle of an n x n matrix."""
    out = np.zeros((n, n), dtype=values.dtype)
    out[np.triu_indices(n, k=1)] = values

    return out


def _wigner_symmetric(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    n = spec.n
    kind = spec.kind.value
    off = n * (n - 1) // 2
    upper = _strict_upper(draw_entries(rng, spec.entry_dist, (off,), COMPONENT_VARIANCE[kind]), n)
    diag = draw_entries(rng, spec.entry_dist, (n,), DIAG_VARIANCE[kind])

    return (upper + upper.T + np.diag(diag)) / np.sqrt(n)


def _wigner_hermitian(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    n = spec.n
    kind = spec.kind.value
    var = COMPONENT_VARIANCE[kind]
    off = n * (n - 1) // 2
    re = draw_entries(rng, spec.entry_dist, (off,), var)
    im = draw_entries(rng, spec.entry_dist, (off,), var)
    upper = _strict_upper(re + 1j * im, n)
    diag = draw_entries(rng, spec.entry_dist, (n,), DIAG_VARIANCE[kind])

    return (upper + upper.conj().T + np.diag(diag)) / np.sqrt(n)


def _wigner_quaternion(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    """Self-dual quaternion matrix in its 2N x 2N complex representation.

    Description:
        The quaternion a + b*i + c*j + d*k is the block [[z, w], [-conj(w), conj(z)]]
        with z = a + ib, w = c + id. Blocks below the diagonal are the quaternion
        conjugates of the blocks above it, diagonal blocks are real multiples of the identity.

    """
    n = spec.n
    kind = spec.kind.value
    var = COMPONENT_VARIANCE[kind]
    off = n * (n - 1) // 2
    a, b, c, d = (draw_entries(rng, spec.entry_dist, (off,), var) for _ in range(4))
    z = _strict_upper(a + 1j * b, n)
    w = _strict_upper(c + 1j * d, n)

    q = np.zeros((2 * n, 2 * n), dtype=complex)
    q[0::2, 0::2] = z
    q[0::2, 1::2] = w
    q[1::2, 0::2] = -w.conj()
    q[1::2, 1::2] = z.conj()

    diag = draw_entries(rng, spec.entry_dist, (n,), DIAG_VARIANCE[kind])

    return (q + q.conj().T + np.diag(np.repeat(diag, 2))) / np.sqrt(n)


def _covariance(spec: EnsembleSpec, rng: np.random.Generator) -> np.ndarray:
    shape = (spec.m, spec.n)
    kind = spec.kind.value
    var = COMPONENT_VARIANCE[kind]

    if spec.kind is EnsembleKind.COVARIANCE_REAL:
        x = draw_entries(rng, spec.entry_dist, shape, var)
    else:
        x = draw_entries(rng, spec.entry_dist, shape, var) + 1j * draw_entries(
            rng, spec.entry_dist, shape, var
        )

    return x / np.sqrt(spec.m)


_SAMPLERS = {
    EnsembleKind.WIGNER_SYMMETRIC: _wigner_symmetric,
    EnsembleKind.WIGNER_HERMITIAN: _wigner_hermitian,
    EnsembleKind.WIGNER_QUATERNION: _wigner_quaternion,
    EnsembleKind.COVARIANCE_REAL: _covariance,
    EnsembleKind.COVARIANCE_COMPLEX: _covariance,
}


def sample(spec: EnsembleSpec) -> MatrixSample:
    """Sample one matrix of `spec`, deterministic in `spec.seed`.

    Params:
        spec (EnsembleSpec): Validated ensemble spec.

    Returns:
        (MatrixSample): H (Wigner kinds) or the rectangular factor A (covariance kinds).

    """
    if not isinstance(spec, EnsembleSpec):
        raise ConfigurationError(f"sample: expected EnsembleSpec, got {type(spec).__name__}")

    rng = derive_rng(spec.seed)
    data = _SAMPLERS[spec.kind](spec, rng)
    log.trace(f"Sampled {spec.kind.value} n={spec.n} seed={spec.seed}")

    return MatrixSample(spec=spec, data=data, seed_used=spec.seed)


def ou_interpolate(initial: MatrixSample, t: float, seed: int) -> MatrixSample:
    """Run the matrix Ornstein-Uhlenbeck flow for time `t` in one exact step.

    Description:
        Returns e^{-t/2} * initial + (1 - e^{-t})^{1/2} * G, G a fresh Gaussian matrix of
        the same kind (same normalization), drawn from `seed`. Entry variances are preserved.

    Params:
        initial (MatrixSample): Starting matrix.
        t (float): Flow time, t >= 0.
        seed (int): Seed of the Gaussian component.

    Returns:
        (MatrixSample): The interpolated matrix, `ou_time` accumulates `t`.

    Raises:
        ConfigurationError: When `t < 0`.

    """
    if not np.isfinite(t) or t < 0:
        raise ConfigurationError(f"ou_interpolate: t must be non-negative, got {t}")

    if t == 0:
        return MatrixSample(
            spec=initial.spec,
            data=initial.data.copy(),
            seed_used=initial.seed_used,
            ou_time=initial.ou_time,
        )

    gaussian_spec = replace(initial.spec, entry_dist=EntryDistribution.GAUSSIAN, seed=seed)
    g = sample(gaussian_spec).data

    data = np.exp(-t / 2.0) * initial.data + np.sqrt(-np.expm1(-t)) * g

    return MatrixSample(
        spec=initial.spec,
        data=data,
        seed_used=initial.seed_used,
        ou_time=initial.ou_time + t,
    )
