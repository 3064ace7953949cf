from __future__ import annotations

from .fixtures import gap_config, perturbed_density

from rmt_lab.exceptions import ConfigurationError, DomainError, RefinementError
from rmt_lab.relaxation1d import (
    GapFlowConfig,
    GridDensity,
    apply_generator,
    curve_frame,
    dirichlet_form,
    fit_decay_rate,
    fokker_planck_gap,
    gap_model,
    grid_frame,
    lsi_ratio,
    moment_matched_family,
    ou_evolve,
    relative_entropy,
    reverse_flow_errors,
    reverse_heat_flow,
    shifted_bump,
    smooth_cutoff,
)

import numpy as np
import pytest

__all__ = [
    "test_moment_matched_family",
    "test_smooth_cutoff",
    "test_generator_annihilates_constants",
    "test_ou_constant_is_fixed",
    "test_ou_linear_mode",
    "test_ou_conserves_mass",
    "test_reverse_heat_flow_trivial_cases",
    "test_reverse_heat_flow_rejects_bad_input",
    "test_reverse_flow_second_order",
    "test_gap_model_refinement",
    "test_equilibrium_has_no_entropy",
    "test_entropy_dissipation",
    "test_lsi_ratio_bound",
    "test_decay_rate_scales_with_radius",
]


def test_moment_matched_family(perturbed_density: GridDensity):
    mean, var = perturbed_density.moments()

    assert perturbed_density.mass == pytest.approx(1.0, abs=1e-12)
    assert mean == pytest.approx(0.0, abs=1e-10)
    assert var == pytest.approx(1.0, abs=1e-8)
    assert np.all(perturbed_density.values > 0)
    assert np.all(moment_matched_family(2.9)(np.linspace(-5, 5, 1001)) > 0)


def test_smooth_cutoff():
    y = np.array([0.0, 0.5, 1.0, 1.5, 2.0, -2.5])
    theta = smooth_cutoff(y)

    assert theta[:3] == pytest.approx([1.0, 1.0, 1.0])
    assert 0.0 < theta[3] < 1.0
    assert theta[4] == 0.0
    assert theta[5] == 0.0


def test_generator_annihilates_constants():
    u = GridDensity.constant(n_points=513)

    assert np.max(np.abs(apply_generator(u))) <= 1e-10


def test_ou_constant_is_fixed():
    u = GridDensity.constant()
    evolved = ou_evolve(u, 1.0)

    assert np.max(np.abs(evolved.values - u.values)) <= 1e-10
    assert ou_evolve(u, 0.0) is u


def test_ou_linear_mode():
    eps = 1e-2
    u = GridDensity.from_function(lambda x: 1.0 + eps * x, normalize=False)
    evolved = ou_evolve(u, 1.0)
    inner = np.abs(u.grid) <= 4.0
    expected = 1.0 + eps * u.grid * np.exp(-0.5)

    assert np.max(np.abs(evolved.values[inner] - expected[inner])) <= 1e-6


def test_ou_conserves_mass(perturbed_density: GridDensity):
    evolved = ou_evolve(perturbed_density, 0.3)

    assert evolved.mass == pytest.approx(perturbed_density.mass, abs=1e-12)
    assert evolved.l1_distance(perturbed_density) > 0


def test_reverse_heat_flow_trivial_cases(perturbed_density: GridDensity):
    assert reverse_heat_flow(perturbed_density, 0.0, 2) is perturbed_density

    ones = GridDensity.constant()
    g = reverse_heat_flow(ones, 0.05, 3)
    assert np.allclose(g.values, 1.0, atol=1e-8)


def test_reverse_heat_flow_rejects_bad_input(perturbed_density: GridDensity):
    with pytest.raises(DomainError):
        reverse_heat_flow(perturbed_density, 0.05, 4)
    with pytest.raises(DomainError):
        reverse_heat_flow(perturbed_density, 0.5, 2)

    vanishing = GridDensity.from_function(lambda x: np.clip(np.abs(x) - 1.0, 0.0, None))
    with pytest.raises(DomainError):
        reverse_heat_flow(vanishing, 0.05, 2)


def test_reverse_flow_second_order(perturbed_density: GridDensity):
    result = reverse_flow_errors(perturbed_density, [0.02, 0.04, 0.08], order=2)

    assert result.slope >= 1.8
    assert np.all(np.diff(result.errors) > 0)
    assert list(result.to_frame().columns) == ["order", "t", "l1_error"]


def test_gap_model_refinement(gap_config: GapFlowConfig):
    model = gap_model(gap_config)

    assert model.masses.sum() == pytest.approx(1.0, abs=1e-12)
    assert model.centers[0] == pytest.approx(0.5 * gap_config.h)

    with pytest.raises(RefinementError):
        gap_model(GapFlowConfig(beta=1, r=0.05, n_cells=100))
    with pytest.raises(ConfigurationError):
        GapFlowConfig(beta=1, r=-1.0)


def test_equilibrium_has_no_entropy(gap_config: GapFlowConfig):
    curve = fokker_planck_gap(gap_config, lambda u: np.ones_like(u), [0.0, 0.1, 0.5])

    assert np.all(np.abs(curve.entropy) <= 1e-12)
    assert np.all(curve.dirichlet <= 1e-12)
    assert np.all(curve.mass_error <= 1e-12)


def test_entropy_dissipation(gap_config: GapFlowConfig):
    times = np.round(np.arange(0.0, 1.0 + 1e-9, 0.01), 10)
    curve = fokker_planck_gap(gap_config, None, times)

    assert curve.is_monotone()
    assert np.max(curve.mass_error) <= 1e-10

    ## dS/dt = -4 D(sqrt q) at t = 0.3
    k = 30
    ds_dt = (curve.entropy[k + 1] - curve.entropy[k - 1]) / (times[k + 1] - times[k - 1])
    assert -ds_dt == pytest.approx(4.0 * curve.dirichlet[k], rel=0.05)

    df = curve_frame(curve)
    assert len(df) == times.size
    assert {"t", "S", "D"} <= set(df.columns)


def test_lsi_ratio_bound(gap_config: GapFlowConfig):
    model = gap_model(gap_config)
    rng = np.random.default_rng(1)
    q = shifted_bump(model)

    assert 0.0 < lsi_ratio(model, q) <= 4.0
    assert relative_entropy(model, q) > 0
    assert dirichlet_form(model, np.sqrt(q)) > 0

    for _ in range(10):
        shift, width = rng.uniform(-0.5, 0.5), rng.uniform(0.1, 0.5)
        assert lsi_ratio(model, shifted_bump(model, shift=shift, width=width)) <= 4.0


@pytest.mark.slow
def test_decay_rate_scales_with_radius():
    times = np.round(np.arange(0.0, 6.0 + 1e-9, 0.05), 10)
    rates = {}
    for r in (0.25, 0.5):
        curve = fokker_planck_gap(GapFlowConfig(beta=1, r=r, n_cells=1000, dt=2e-3), None, times)
        rates[r] = fit_decay_rate(curve)

    assert rates[0.25] / rates[0.5] >= 3.0
    assert rates[0.5] * 0.5**2 >= 1.0

    assert len(grid_frame(GridDensity.constant(n_points=65))) == 65
