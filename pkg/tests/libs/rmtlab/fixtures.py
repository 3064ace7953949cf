from __future__ import annotations

from pathlib import Path

from rmt_lab.density import DensityModel, marchenko_pastur, semicircle
from rmt_lab.dynamics import FlowConfig
from rmt_lab.ensembles import EnsembleSpec, MatrixSample, SpectralPoints, sample, spectrum
from rmt_lab.enums import DriftKind, EnsembleKind, EntryDistribution, HamiltonianKind
from rmt_lab.gibbs import HamiltonianSpec
from rmt_lab.relaxation1d import GapFlowConfig, GridDensity, moment_matched_family

import pytest

__all__ = [
    "semicircle_model",
    "mp_model",
    "goe_spec",
    "goe_points",
    "covariance_sample",
    "wigner_beta1_spec",
    "wigner_beta2_spec",
    "dbm_config",
    "perturbed_density",
    "gap_config",
    "checkpoint_file",
]


@pytest.fixture
def semicircle_model() -> DensityModel:
    return semicircle()


@pytest.fixture
def mp_model() -> DensityModel:
    return marchenko_pastur(0.25)


@pytest.fixture
def goe_spec() -> EnsembleSpec:
    return EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=200, seed=7)


@pytest.fixture
def goe_points(goe_spec: EnsembleSpec) -> SpectralPoints:
    return spectrum(sample(goe_spec))


@pytest.fixture
def covariance_sample() -> MatrixSample:
    spec = EnsembleSpec(
        kind=EnsembleKind.COVARIANCE_REAL,
        n=20,
        m=40,
        entry_dist=EntryDistribution.GAUSSIAN,
        seed=11,
    )

    return sample(spec)


@pytest.fixture
def wigner_beta1_spec() -> HamiltonianSpec:
    return HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=1, n=2)


@pytest.fixture
def wigner_beta2_spec() -> HamiltonianSpec:
    return HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=2, n=2)


@pytest.fixture
def dbm_config() -> FlowConfig:
    return FlowConfig(drift=DriftKind.DBM, beta=2, dt=1e-3, horizon=0.05, seed=3)


@pytest.fixture
def perturbed_density() -> GridDensity:
    return GridDensity.from_function(moment_matched_family(0.5))


@pytest.fixture
def gap_config() -> GapFlowConfig:
    return GapFlowConfig(beta=1, r=0.5, n_cells=1000, dt=1e-3)


@pytest.fixture
def checkpoint_file(tmp_path: Path) -> Path:
    return tmp_path / "trajectory.bin"
