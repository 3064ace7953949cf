from __future__ import annotations

from enum import Enum

__all__ = [
    "EnsembleKind",
    "EntryDistribution",
    "SpectrumKind",
    "Law",
    "HamiltonianKind",
    "DriftKind",
]


class EnsembleKind(str, Enum):
    """Symmetry classes that can be sampled."""

    WIGNER_SYMMETRIC: str = "wigner-symmetric"
    WIGNER_HERMITIAN: str = "wigner-hermitian"
    WIGNER_QUATERNION: str = "wigner-quaternion"
    COVARIANCE_REAL: str = "covariance-real"
    COVARIANCE_COMPLEX: str = "covariance-complex"

    @property
    def is_covariance(self) -> bool:
        return self in (EnsembleKind.COVARIANCE_REAL, EnsembleKind.COVARIANCE_COMPLEX)

    @property
    def beta(self) -> int:
        """Dyson index of the symmetry class."""
        match self:
            case EnsembleKind.WIGNER_SYMMETRIC | EnsembleKind.COVARIANCE_REAL:
                return 1
            case EnsembleKind.WIGNER_HERMITIAN | EnsembleKind.COVARIANCE_COMPLEX:
                return 2
            case EnsembleKind.WIGNER_QUATERNION:
                return 4


class EntryDistribution(str, Enum):
    GAUSSIAN: str = "gaussian"
    RADEMACHER: str = "rademacher"
    UNIFORM: str = "uniform"


class SpectrumKind(str, Enum):
    EIGENVALUES: str = "eigenvalues"
    SINGULAR_VALUES: str = "singular-values"


class Law(str, Enum):
    """Limiting spectral laws."""

    SEMICIRCLE: str = "semicircle"
    MARCHENKO_PASTUR: str = "marchenko-pastur"
    MP_SINGULAR: str = "mp-singular"


class HamiltonianKind(str, Enum):
    WIGNER: str = "wigner"
    COVARIANCE: str = "covariance"


class DriftKind(str, Enum):
    DBM: str = "dbm"
    COVARIANCE_FLOW: str = "covariance-flow"
    LOCAL_RELAXATION: str = "local-relaxation"
