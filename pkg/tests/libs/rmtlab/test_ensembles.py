from __future__ import annotations

from .fixtures import covariance_sample, goe_points, goe_spec

from rmt_lab.ensembles import (
    EnsembleSpec,
    MatrixSample,
    SpectralPoints,
    check_interlacing,
    minor_spectrum,
    ou_interpolate,
    sample,
    sample_spectra,
    spectra_frame,
    spectrum,
)
from rmt_lab.enums import EnsembleKind, EntryDistribution, SpectrumKind
from rmt_lab.exceptions import ConfigurationError, DomainError
from rmt_lab.utils import derive_rng

import numpy as np
import pytest
from scipy import stats

__all__ = [
    "test_symmetric_sample_is_symmetric",
    "test_rademacher_covariance_normalization",
    "test_sample_is_deterministic_in_seed",
    "test_offdiagonal_variance",
    "test_symmetric_sample_draws_upper_triangle",
    "test_hermitian_and_quaternion_samples",
    "test_invalid_dimension_ratio",
    "test_spectrum_of_diagonal_matrix",
    "test_singular_values_of_single_column",
    "test_semicircle_support",
    "test_minor_spectrum_interlaces",
    "test_minor_spectrum_of_one_column",
    "test_minor_spectrum_rejects_wigner",
    "test_ou_interpolate",
    "test_ou_interpolate_forgets_initial",
    "test_spectra_frame",
]


def test_symmetric_sample_is_symmetric():
    s = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=2, seed=5))

    assert s.data.shape == (2, 2)
    assert s.data[0, 1] == s.data[1, 0]
    assert s.seed_used == 5


def test_rademacher_covariance_normalization():
    spec = EnsembleSpec(
        kind=EnsembleKind.COVARIANCE_REAL, n=1, m=4, entry_dist=EntryDistribution.RADEMACHER, seed=9
    )
    s = sample(spec)

    assert s.data.shape == (4, 1)
    assert np.all(np.abs(s.data) == 0.5)


def test_sample_is_deterministic_in_seed(goe_spec: EnsembleSpec):
    a = sample(goe_spec)
    b = sample(goe_spec)
    c = sample(goe_spec.with_seed(goe_spec.seed + 1))

    assert np.array_equal(a.data, b.data)
    assert not np.array_equal(a.data, c.data)


@pytest.mark.parametrize("dist", ["gaussian", "rademacher", "uniform"])
def test_offdiagonal_variance(dist: str):
    n = 300
    s = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=n, entry_dist=dist, seed=1))
    iu = np.triu_indices(n, k=1)
    scaled = np.sqrt(n) * s.data[iu]

    ## ~45k entries, relative error of the sample variance is well below 3%
    assert abs(np.mean(scaled * scaled) - 1.0) < 0.03
    assert abs(np.mean(scaled)) < 0.03


def test_symmetric_sample_draws_upper_triangle():
    n, seed = 5, 13
    s = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=n, seed=seed))

    ## n(n-1)/2 off-diagonal normals, then n diagonal normals with variance 2
    rng = derive_rng(seed)
    off = rng.standard_normal(n * (n - 1) // 2)
    diag = rng.standard_normal(n) * np.sqrt(2.0)

    iu = np.triu_indices(n, k=1)
    assert s.data[iu] == pytest.approx(off / np.sqrt(n), rel=1e-14)
    assert s.data.T[iu] == pytest.approx(off / np.sqrt(n), rel=1e-14)
    assert np.diag(s.data) == pytest.approx(diag / np.sqrt(n), rel=1e-14)


def test_hermitian_and_quaternion_samples():
    h = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_HERMITIAN, n=6, seed=2))
    q = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_QUATERNION, n=6, seed=2))

    assert np.array_equal(h.data, h.data.conj().T)
    assert q.data.shape == (12, 12)
    assert len(spectrum(q)) == 6
    assert spectrum(h).kind is SpectrumKind.EIGENVALUES


@pytest.mark.parametrize("n, m", [(4, 4), (6, 4)])
def test_invalid_dimension_ratio(n: int, m: int):
    with pytest.raises(ConfigurationError) as exc:
        EnsembleSpec(kind=EnsembleKind.COVARIANCE_REAL, n=n, m=m)

    assert "0<d<1" in exc.value.reason


def test_spectrum_of_diagonal_matrix():
    spec = EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=3)
    s = MatrixSample(spec=spec, data=np.diag([3.0, 1.0, 2.0]), seed_used=0)

    assert np.allclose(spectrum(s).values, [1.0, 2.0, 3.0])


def test_singular_values_of_single_column():
    spec = EnsembleSpec(kind=EnsembleKind.COVARIANCE_REAL, n=3, m=5)
    data = np.zeros((5, 3))
    data[0, 0] = -2.5

    points = spectrum(MatrixSample(spec=spec, data=data, seed_used=0))

    assert points.kind is SpectrumKind.SINGULAR_VALUES
    assert np.allclose(points.values, [0.0, 0.0, 2.5])


def test_semicircle_support():
    spec = EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=300)
    spectra = sample_spectra(spec, range(5))
    values = np.concatenate([p.values for p in spectra])

    assert np.mean(np.abs(values) <= 2.0) >= 0.98


def test_minor_spectrum_interlaces(covariance_sample: MatrixSample):
    parent = spectrum(covariance_sample)

    for drop in (1, 7, 20):
        minor = minor_spectrum(covariance_sample, drop)
        assert len(minor) == 19
        assert check_interlacing(parent, minor)


def test_minor_spectrum_of_one_column():
    s = sample(EnsembleSpec(kind=EnsembleKind.COVARIANCE_COMPLEX, n=1, m=3, seed=4))
    minor = minor_spectrum(s, 1)

    assert len(minor) == 0
    assert check_interlacing(spectrum(s), minor)


def test_minor_spectrum_rejects_wigner(covariance_sample: MatrixSample):
    s = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=4))

    with pytest.raises(DomainError):
        minor_spectrum(s, 1)
    with pytest.raises(DomainError):
        minor_spectrum(covariance_sample, 21)


def test_ou_interpolate(goe_spec: EnsembleSpec):
    initial = sample(goe_spec)

    same = ou_interpolate(initial, 0.0, seed=1)
    assert np.array_equal(same.data, initial.data)
    assert same.data is not initial.data

    moved = ou_interpolate(initial, 0.7, seed=1)
    n = goe_spec.n
    iu = np.triu_indices(n, k=1)
    scaled = np.sqrt(n) * moved.data[iu]
    assert moved.ou_time == pytest.approx(0.7)
    assert abs(np.mean(scaled * scaled) - 1.0) < 0.05

    with pytest.raises(ConfigurationError):
        ou_interpolate(initial, -0.1, seed=1)


def test_ou_interpolate_forgets_initial():
    spec = EnsembleSpec(
        kind=EnsembleKind.WIGNER_SYMMETRIC, n=150, entry_dist=EntryDistribution.RADEMACHER, seed=2
    )
    initial = sample(spec)

    moved = ou_interpolate(initial, 50.0, seed=21)
    fresh = sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=150, seed=21))

    ## e^{-25} of the initial matrix survives
    assert np.max(np.abs(moved.data - fresh.data)) < 1e-10

    n = spec.n
    iu = np.triu_indices(n, k=1)
    scaled = np.sqrt(n) * moved.data[iu]
    rademacher = np.sqrt(n) * sample(spec.with_seed(99)).data[iu]
    assert abs(np.mean(scaled * scaled) - 1.0) < 0.04
    assert abs(np.corrcoef(scaled, np.sqrt(n) * initial.data[iu])[0, 1]) < 0.05
    ## Rademacher entries are replaced by Gaussian ones
    assert stats.kstest(scaled, "norm").pvalue > 1e-3
    assert stats.ks_2samp(scaled, rademacher).statistic > 0.1


def test_spectra_frame(goe_points: SpectralPoints):
    df = spectra_frame([goe_points, goe_points], [7, 8])

    assert list(df.columns) == ["seed", "k", "value"]
    assert len(df) == 2 * goe_points.n
    assert df["k"].iloc[0] == 1
    assert sorted(df["seed"].unique().tolist()) == [7, 8]
