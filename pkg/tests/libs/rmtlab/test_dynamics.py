from __future__ import annotations

from pathlib import Path

from .fixtures import checkpoint_file, dbm_config, semicircle_model

from rmt_lab.density import DensityModel, classical_locations
from rmt_lab.dynamics import (
    FlowConfig,
    Trajectory,
    drift_vector,
    hamiltonian_spec_for,
    load_checkpoint,
    pseudo_potential_for,
    rigidity_q,
    rigidity_q_ensemble,
    run_flow,
    run_flow_ensemble,
    save_checkpoint,
    step,
    trajectory_frame,
)
from rmt_lab.ensembles import EnsembleSpec, sample, spectrum
from rmt_lab.enums import DriftKind, EnsembleKind
from rmt_lab.exceptions import ConfigurationError, SingularConfigurationError
from rmt_lab.gibbs import grad, pseudo_grad

import numpy as np
import pytest

__all__ = [
    "test_dbm_drift_two_points",
    "test_drift_is_scaled_gradient",
    "test_drift_rejects_coincident_points",
    "test_step_without_noise",
    "test_step_at_critical_point",
    "test_zero_horizon_returns_initial",
    "test_single_point_step_matches_ou",
    "test_run_flow_keeps_order",
    "test_long_run_keeps_order",
    "test_run_flow_is_deterministic",
    "test_covariance_flow_stays_positive",
    "test_rigidity_at_classical_locations",
    "test_local_relaxation_contracts",
    "test_checkpoint_round_trip",
    "test_invalid_flow_configs",
]


def test_dbm_drift_two_points():
    config = FlowConfig(drift=DriftKind.DBM, beta=2, dt=1e-3, horizon=1.0)

    assert drift_vector(config, [-1.0, 1.0]) == pytest.approx([0.25, -0.25])


@pytest.mark.parametrize(
    "config",
    [
        FlowConfig(drift=DriftKind.DBM, beta=1, dt=1e-3, horizon=1.0),
        FlowConfig(drift=DriftKind.COVARIANCE_FLOW, beta=2, dt=1e-3, horizon=1.0, d=0.5),
        FlowConfig(
            drift=DriftKind.LOCAL_RELAXATION,
            beta=4,
            dt=1e-3,
            horizon=1.0,
            r=0.3,
            gamma=[0.2, 0.6, 1.0, 1.5, 2.1],
        ),
    ],
)
def test_drift_is_scaled_gradient(config: FlowConfig):
    x = np.array([0.3, 0.7, 1.1, 1.6, 2.2])
    n = x.size
    g = grad(hamiltonian_spec_for(config, n), x)
    pp = pseudo_potential_for(config)
    if pp is not None:
        g = g + pseudo_grad(pp, x)

    assert drift_vector(config, x) == pytest.approx(-g / (2 * n), rel=1e-12, abs=1e-12)


def test_drift_rejects_coincident_points(dbm_config: FlowConfig):
    with pytest.raises(SingularConfigurationError):
        drift_vector(dbm_config, [0.0, 1.0, 1.0])


def test_step_without_noise(dbm_config: FlowConfig):
    x = np.array([-1.0, 0.0, 1.5])
    dt = 1e-4

    new = step(dbm_config, x, dt, np.zeros(3))

    assert new.values == pytest.approx(x + dt * drift_vector(dbm_config, x))


def test_step_at_critical_point():
    ## -x_i/4 + 1/(2N (x_i - x_j)) vanishes at x = +-1/sqrt(2) when N = 2
    config = FlowConfig(drift=DriftKind.DBM, beta=1, dt=1e-3, horizon=1.0)
    a = 1.0 / np.sqrt(2.0)
    x = np.array([-a, a])

    assert drift_vector(config, x) == pytest.approx([0.0, 0.0], abs=1e-15)
    assert step(config, x, 1e-2, np.zeros(2)).values == pytest.approx(x, abs=1e-15)


def test_zero_horizon_returns_initial():
    config = FlowConfig(drift=DriftKind.DBM, beta=2, dt=1e-3, horizon=0.0)
    x = np.array([-0.5, 0.1, 0.9])

    traj = run_flow(x, config)

    assert len(traj) == 1
    assert np.array_equal(traj.states[0], x)


def test_single_point_step_matches_ou():
    ## N = 1, beta = 2: dx = -x/2 dt + dB, the exact OU step is x e^{-dt/2} + xi (1 - e^{-dt})^{1/2}
    config = FlowConfig(drift=DriftKind.DBM, beta=2, dt=1e-3, horizon=1.0)
    x, dt = 0.7, 1e-3

    for xi in (0.0, 0.3, -1.2):
        exact = x * np.exp(-dt / 2.0) + xi * np.sqrt(-np.expm1(-dt))
        new = step(config, [x], dt, [xi])

        assert len(new) == 1
        assert abs(new.values[0] - exact) <= dt**2 + abs(xi) * dt**1.5


def test_run_flow_keeps_order(dbm_config: FlowConfig):
    initial = spectrum(sample(EnsembleSpec(kind=EnsembleKind.WIGNER_HERMITIAN, n=50, seed=1)))
    times = np.linspace(0.0, dbm_config.horizon, 6)

    traj = run_flow(initial, dbm_config, times)

    assert traj.states.shape == (6, 50)
    assert np.array_equal(traj.states[0], initial.values)
    assert np.all(np.diff(traj.states, axis=1) > 0)
    assert traj.final.is_strictly_ordered


@pytest.mark.slow
def test_long_run_keeps_order():
    initial = spectrum(sample(EnsembleSpec(kind=EnsembleKind.WIGNER_SYMMETRIC, n=50, seed=8)))
    ## 1e5 steps of dt = 1e-5
    config = FlowConfig(drift=DriftKind.DBM, beta=1, dt=1e-5, horizon=1.0, seed=6)
    times = np.linspace(0.0, config.horizon, 101)

    traj = run_flow(initial, config, times)

    assert traj.times[-1] == pytest.approx(1.0)
    assert np.all(np.diff(traj.states, axis=1) > 0)
    assert traj.final.is_strictly_ordered


def test_run_flow_is_deterministic(dbm_config: FlowConfig):
    x = np.linspace(-1.5, 1.5, 10)

    a = run_flow(x, dbm_config)
    b = run_flow(x, dbm_config)
    c = run_flow(x, dbm_config.with_seed(dbm_config.seed + 1))

    assert np.array_equal(a.states, b.states)
    assert not np.array_equal(a.states, c.states)

    batch = run_flow_ensemble([x, x], dbm_config)
    assert not np.array_equal(batch[0].states, batch[1].states)


def test_covariance_flow_stays_positive():
    spec = EnsembleSpec(kind=EnsembleKind.COVARIANCE_REAL, n=20, m=40, seed=2)
    initial = spectrum(sample(spec))
    config = FlowConfig(drift=DriftKind.COVARIANCE_FLOW, beta=1, dt=1e-3, horizon=0.1, d=0.5, seed=5)

    traj = run_flow(initial, config)

    assert np.all(traj.states > 0)
    assert np.all(np.diff(traj.states, axis=1) > 0)


def test_rigidity_at_classical_locations(semicircle_model: DensityModel, dbm_config: FlowConfig):
    gamma = classical_locations(semicircle_model, 8)
    frozen = Trajectory(times=[0.0, 1.0], states=np.vstack([gamma, gamma]), config=dbm_config)

    assert np.array_equal(rigidity_q(frozen, gamma), [0.0, 0.0])
    assert np.array_equal(rigidity_q_ensemble([frozen, frozen], gamma), [0.0, 0.0])

    with pytest.raises(ValueError):
        rigidity_q(frozen, gamma[:-1])


def test_local_relaxation_contracts(semicircle_model: DensityModel):
    n = 30
    ## Stay off the edge point gamma_N = 2 so the start is strictly ordered
    gamma = classical_locations(semicircle_model, n) - 1.0 / n
    start = gamma + 0.2
    config = FlowConfig(
        drift=DriftKind.LOCAL_RELAXATION,
        beta=2,
        dt=1e-3,
        horizon=0.2,
        r=0.1,
        gamma=gamma,
        seed=4,
    )

    traj = run_flow(start, config)
    q = rigidity_q(traj, gamma)

    ## Confinement rate 1/(2R^2) = 50 relaxes the initial offset well within the horizon
    assert q[-1] < 0.1 * q[0]


def test_checkpoint_round_trip(checkpoint_file: Path, dbm_config: FlowConfig):
    traj = run_flow(np.linspace(-1.0, 1.0, 5), dbm_config, [0.0, 0.02, 0.05])

    save_checkpoint(traj, checkpoint_file)
    loaded = load_checkpoint(checkpoint_file, dbm_config)

    assert np.array_equal(loaded.times, traj.times)
    assert np.array_equal(loaded.states, traj.states)

    df = trajectory_frame(loaded)
    assert list(df.columns) == ["seed", "time", "k", "value"]
    assert len(df) == 15

    checkpoint_file.write_bytes(checkpoint_file.read_bytes()[:-8])
    with pytest.raises(ValueError):
        load_checkpoint(checkpoint_file, dbm_config)


def test_invalid_flow_configs():
    with pytest.raises(ConfigurationError):
        FlowConfig(drift=DriftKind.DBM, beta=0.5, dt=1e-3, horizon=1.0)
    with pytest.raises(ConfigurationError):
        FlowConfig(drift=DriftKind.DBM, beta=1, dt=0.5, horizon=0.1)
    with pytest.raises(ConfigurationError):
        FlowConfig(drift=DriftKind.COVARIANCE_FLOW, beta=1, dt=1e-3, horizon=1.0)
    with pytest.raises(ConfigurationError):
        FlowConfig(drift=DriftKind.LOCAL_RELAXATION, beta=1, dt=1e-3, horizon=1.0, r=0.5)
