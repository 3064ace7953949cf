from __future__ import annotations

import math

from .fixtures import wigner_beta1_spec, wigner_beta2_spec

from rmt_lab.enums import HamiltonianKind
from rmt_lab.exceptions import ConfigurationError, SingularConfigurationError
from rmt_lab.gibbs import (
    HamiltonianSpec,
    PseudoPotential,
    convex_bound_slack,
    covariance_coefficient,
    energy,
    grad,
    hessian_quadratic_form,
    is_convex_bound_satisfied,
    pseudo_energy,
    pseudo_grad,
    relaxation_hessian_bound_check,
)

import numpy as np
import pytest

__all__ = [
    "test_energy_two_points",
    "test_energy_permutation_symmetric",
    "test_energy_shift_changes_confinement_only",
    "test_energy_matches_double_loop",
    "test_energy_rejects_coincident_points",
    "test_covariance_rejects_non_positive_points",
    "test_grad_single_point",
    "test_grad_matches_finite_differences",
    "test_hessian_quadratic_form",
    "test_convex_bound_random_directions",
    "test_pseudo_potential",
    "test_relaxation_bound",
    "test_relaxation_bound_needs_confinement",
    "test_invalid_specs",
]


def test_energy_two_points(wigner_beta2_spec: HamiltonianSpec):
    assert energy(wigner_beta2_spec, [-1.0, 1.0]) == pytest.approx(2.0 - 2.0 * np.log(2.0))


@pytest.mark.parametrize(
    "spec",
    [
        HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=1, n=7),
        HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=4, n=7, d=0.5),
    ],
)
def test_energy_permutation_symmetric(spec: HamiltonianSpec):
    rng = np.random.default_rng(3)
    x = np.sort(rng.uniform(0.1, 2.0, size=spec.n))
    reference = energy(spec, x)

    for _ in range(5):
        perm = rng.permutation(spec.n)
        assert energy(spec, x[perm]) == pytest.approx(reference, rel=1e-12)
        assert energy(spec, np.sort(x[perm])) == reference


def test_energy_shift_changes_confinement_only():
    spec = HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=2, n=6)
    x = np.array([-1.4, -0.6, -0.1, 0.3, 0.8, 1.9])
    shift = 0.37

    delta = energy(spec, x + shift) - energy(spec, x)
    confinement = spec.beta * spec.n * (np.sum((x + shift) ** 2) - np.sum(x**2)) / 4.0

    assert delta == pytest.approx(confinement, abs=1e-10)


@pytest.mark.parametrize(
    "spec",
    [
        HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=1, n=3),
        HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=2, n=3, d=0.5),
    ],
)
def test_energy_matches_double_loop(spec: HamiltonianSpec):
    x = np.random.default_rng(8).uniform(0.2, 2.5, size=3)
    n, beta = spec.n, spec.beta
    covariance = spec.kind is HamiltonianKind.COVARIANCE

    value = 0.0
    for i in range(n):
        if covariance:
            c_n = n * (1.0 / spec.d - 1.0) + 1.0 - 1.0 / beta
            value += n * x[i] ** 2 / (2.0 * spec.d) - c_n * math.log(x[i])
        else:
            value += n * x[i] ** 2 / 4.0
        for j in range(i + 1, n):
            value -= math.log(abs(x[i] - x[j]))
            if covariance:
                value -= math.log(x[i] + x[j])

    assert energy(spec, x) == pytest.approx(beta * value, rel=1e-12, abs=1e-12)


def test_energy_rejects_coincident_points(wigner_beta2_spec: HamiltonianSpec):
    with pytest.raises(SingularConfigurationError) as exc:
        energy(wigner_beta2_spec, [0.5, 0.5])

    assert exc.value.indices == (0, 1)


def test_covariance_rejects_non_positive_points():
    spec = HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=1, n=3, d=0.5)

    with pytest.raises(SingularConfigurationError):
        energy(spec, [-0.1, 0.5, 1.0])


def test_grad_single_point():
    spec = HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=2, n=1)

    assert grad(spec, [2.0]) == pytest.approx([2.0])


@pytest.mark.parametrize(
    "spec",
    [
        HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=1, n=5),
        HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=2, n=5, d=0.4),
    ],
)
def test_grad_matches_finite_differences(spec: HamiltonianSpec):
    x = np.array([0.3, 0.7, 1.1, 1.6, 2.2])
    g = grad(spec, x)
    h = 1e-6

    for k in range(x.size):
        step = np.zeros_like(x)
        step[k] = h
        fd = (energy(spec, x + step) - energy(spec, x - step)) / (2 * h)
        assert g[k] == pytest.approx(fd, rel=1e-5, abs=1e-6)


def test_hessian_quadratic_form(wigner_beta1_spec: HamiltonianSpec):
    x = [0.0, 1.0]

    assert hessian_quadratic_form(wigner_beta1_spec, x, [1.0, -1.0]) == pytest.approx(3.0)
    assert hessian_quadratic_form(wigner_beta1_spec, x, [0.0, 0.0]) == 0.0
    assert convex_bound_slack(wigner_beta1_spec, x, [1.0, -1.0]) == pytest.approx(0.5)


@pytest.mark.parametrize("kind, d", [("wigner", None), ("covariance", 0.5)])
@pytest.mark.parametrize("beta", [1, 2, 4])
def test_convex_bound_random_directions(kind: str, d: float | None, beta: int):
    rng = np.random.default_rng(beta)
    n = 12
    spec = HamiltonianSpec(kind=kind, beta=beta, n=n, d=d)

    for _ in range(200):
        x = np.sort(rng.uniform(0.05, 3.0, n))
        v = rng.standard_normal(n)
        assert is_convex_bound_satisfied(spec, x, v)


def test_pseudo_potential():
    gamma = np.array([-1.0, 0.0, 1.0, 2.0])
    pp = PseudoPotential(gamma=gamma, r=0.5)

    assert pseudo_energy(pp, gamma) == 0.0
    off = gamma.copy()
    off[2] += 0.5
    assert pseudo_energy(pp, off) == pytest.approx(pp.n / 2.0)
    assert pseudo_grad(pp, off) == pytest.approx([0.0, 0.0, pp.n / 0.5, 0.0])


def test_relaxation_bound(wigner_beta1_spec: HamiltonianSpec):
    rng = np.random.default_rng(0)
    n = 10
    spec = HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=1, n=n)
    pp = PseudoPotential(gamma=np.linspace(-2.0, 2.0, n), r=0.3)
    x = np.sort(rng.uniform(-2.0, 2.0, n))

    assert relaxation_hessian_bound_check(spec, pp, x, np.zeros(n))
    for _ in range(1000):
        assert relaxation_hessian_bound_check(spec, pp, x, rng.standard_normal(n))


def test_relaxation_bound_needs_confinement(wigner_beta1_spec: HamiltonianSpec):
    pp = PseudoPotential(gamma=[-0.5, 0.5], r=0.5)
    x = [0.0, 1.0]
    v = [1.0, 1.0]

    assert relaxation_hessian_bound_check(wigner_beta1_spec, pp, x, v)
    assert not relaxation_hessian_bound_check(
        wigner_beta1_spec, pp, x, v, include_pseudo=False, u_second_derivative=-1.0
    )


def test_invalid_specs():
    with pytest.raises(ConfigurationError):
        HamiltonianSpec(kind=HamiltonianKind.WIGNER, beta=0.5, n=3)
    with pytest.raises(ConfigurationError):
        HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=1, n=3)
    with pytest.raises(ConfigurationError):
        PseudoPotential(gamma=[1.0, 0.0], r=1.0)

    spec = HamiltonianSpec(kind=HamiltonianKind.COVARIANCE, beta=1, n=4, d=0.5)
    assert covariance_coefficient(spec) == pytest.approx(4 * (2 - 1) + 1 - 1)
