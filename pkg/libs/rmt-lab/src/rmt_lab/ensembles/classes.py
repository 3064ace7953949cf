from __future__ import annotations

from dataclasses import dataclass, field, replace
import typing as t

from rmt_lab.enums import EnsembleKind, EntryDistribution, SpectrumKind
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.utils import validate_seed

import numpy as np

__all__ = ["EnsembleSpec", "MatrixSample", "SpectralPoints"]


@dataclass(frozen=True)
class EnsembleSpec:
    """What to sample.

    Params:
        kind (EnsembleKind): Symmetry class.
        n (int): Matrix size N (number of eigen/singular values).
        m (int|None): Rows M of the covariance factor A. Required for covariance kinds.
        entry_dist (EntryDistribution): Law of the unscaled entries.
        seed (int): 64-bit unsigned seed.

    Raises:
        ConfigurationError: When `n < 1`, `m` is missing or `d = n/m` is outside (0, 1).

    """

    kind: EnsembleKind
    n: int
    m: int | None = None
    entry_dist: EntryDistribution = EntryDistribution.GAUSSIAN
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", EnsembleKind(self.kind))
            object.__setattr__(self, "entry_dist", EntryDistribution(self.entry_dist))
        except ValueError as exc:
            raise ConfigurationError(f"ensemble: {exc}") from exc

        if int(self.n) < 1:
            raise ConfigurationError(f"ensemble: n must be a positive integer, got {self.n}")

        try:
            object.__setattr__(self, "seed", validate_seed(self.seed))
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"ensemble: {exc}") from exc

        if self.kind.is_covariance:
            if self.m is None or int(self.m) < 1:
                raise ConfigurationError(
                    f"ensemble: covariance kinds require a positive m, got {self.m}"
                )
            d = self.n / self.m
            if not 0 < d < 1:
                raise ConfigurationError(
                    f"ensemble: dimension ratio d=n/m={d:g} violates 0<d<1"
                )

    @property
    def d(self) -> float | None:
        return self.n / self.m if self.kind.is_covariance else None

    @property
    def beta(self) -> int:
        return self.kind.beta

    def with_seed(self, seed: int) -> "EnsembleSpec":
        return replace(self, seed=seed)

    def as_dict(self) -> dict[str, t.Any]:
        return {
            "kind": self.kind.value,
            "n": self.n,
            "m": self.m,
            "entry_dist": self.entry_dist.value,
            "seed": self.seed,
        }


@dataclass(frozen=True, eq=False)
class MatrixSample:
    """A sampled matrix.

    Description:
        Wigner kinds hold the N x N matrix H (2N x 2N complex for quaternion kind).
        Covariance kinds hold the M x N factor A, never A*A.

    """

    spec: EnsembleSpec
    data: np.ndarray
    seed_used: int
    ou_time: float = 0.0

    def __post_init__(self):
        data = np.asarray(self.data)
        n = self.spec.n

        if self.spec.kind.is_covariance:
            expected = (self.spec.m, n)
        elif self.spec.kind is EnsembleKind.WIGNER_QUATERNION:
            expected = (2 * n, 2 * n)
        else:
            expected = (n, n)

        if data.shape != expected:
            raise ConfigurationError(
                f"sample: {self.spec.kind.value} data must have shape {expected}, got {data.shape}"
            )

        if not self.spec.kind.is_covariance and not np.array_equal(data, data.conj().T):
            raise ConfigurationError(
                f"sample: {self.spec.kind.value} data is not exactly self-adjoint"
            )

        object.__setattr__(self, "data", data)

    @property
    def is_covariance(self) -> bool:
        return self.spec.kind.is_covariance


@dataclass(frozen=True, eq=False)
class SpectralPoints:
    """Ordered eigenvalues or singular values x_1 <= ... <= x_N.

    Params:
        values (np.ndarray): Sorted real values.
        kind (SpectrumKind): Eigenvalues or singular values.
        spec (EnsembleSpec|None): Provenance. `None` for hand-built configurations.

    """

    values: np.ndarray
    kind: SpectrumKind = SpectrumKind.EIGENVALUES
    spec: EnsembleSpec | None = field(default=None, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        object.__setattr__(self, "kind", SpectrumKind(self.kind))

        if not np.all(np.isfinite(values)):
            raise ValueError("Spectral points must be finite")
        if values.size > 1 and np.any(np.diff(values) < 0):
            raise ValueError("Spectral points must be sorted non-decreasing")
        if self.kind is SpectrumKind.SINGULAR_VALUES and values.size and values[0] < 0:
            raise ValueError("Singular values must be non-negative")

        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __len__(self) -> int:
        return self.n

    @property
    def squared(self) -> np.ndarray:
        """Eigenvalues of A*A when these are singular values."""
        return self.values**2

    @property
    def is_strictly_ordered(self) -> bool:
        return bool(self.values.size < 2 or np.all(np.diff(self.values) > 0))

    @classmethod
    def from_unsorted(
        cls,
        values: t.Iterable[float],
        kind: SpectrumKind = SpectrumKind.EIGENVALUES,
        spec: EnsembleSpec | None = None,
    ) -> "SpectralPoints":
        arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=float)

        return cls(values=np.sort(arr, kind="stable"), kind=kind, spec=spec)
