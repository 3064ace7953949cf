from __future__ import annotations

import typing as t

from rmt_lab.density import classical_locations, mp_singular, semicircle
from rmt_lab.ensembles import EnsembleSpec, check_interlacing, minor_spectrum, sample, spectrum
from rmt_lab.enums import EnsembleKind, HamiltonianKind
from rmt_lab.gibbs import (
    HamiltonianSpec,
    PseudoPotential,
    convex_bound_slack,
    relaxation_bound_slack,
)
from rmt_lab.utils import derive_rng, derive_seed

import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["hessian_audit_seed", "summarize_hessian_audit"]

AUDIT_BETAS: tuple[int, ...] = (1, 2, 4)
DEFAULT_TRIALS: int = 4
DEFAULT_AUDIT_N: int = 8
DEFAULT_RADIUS: float = 0.5
DEFAULT_RATIO: float = 0.5
## Tolerance on the relative slacks before a trial counts as a violation
SLACK_TOL: float = 1e-9

_COVARIANCE_KINDS: dict[int, EnsembleKind] = {
    1: EnsembleKind.COVARIANCE_REAL,
    2: EnsembleKind.COVARIANCE_COMPLEX,
}


def _ratio(config: "ExperimentConfig", n: int) -> float:
    if config.ensemble.get("d") is not None:
        return float(config.ensemble["d"])
    if config.ensemble.get("m") is not None:
        return n / float(config.ensemble["m"])

    return DEFAULT_RATIO


def _random_configuration(rng: np.random.Generator, lo: float, hi: float, n: int) -> np.ndarray:
    """n distinct sorted points drawn uniformly from [lo, hi]."""
    while True:
        x = np.sort(rng.uniform(lo, hi, size=n))
        if np.all(np.diff(x) > 0):
            return x


def _interlacing_ok(kind: EnsembleKind, n: int, d: float, seed: int) -> bool:
    """Cauchy interlacing for one covariance sample and a random deleted column."""
    spec = EnsembleSpec(kind=kind, n=n, m=int(round(n / d)), seed=seed)
    matrix = sample(spec)
    drop = int(derive_rng(seed).integers(1, n + 1))

    return check_interlacing(spectrum(matrix), minor_spectrum(matrix, drop))


def hessian_audit_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """Convexity and relaxation Hessian bounds at random (x, v) for both kinds and beta in (1, 2, 4).

    Description:
        `control_slack` evaluates the relaxation bound with the confinement W dropped and
        U'' set to 0; it is expected to go negative for some trials.

    """
    n = config.sizes[0] if config.sizes else DEFAULT_AUDIT_N
    d = _ratio(config, n)
    r = float(config.relax("r", DEFAULT_RADIUS))
    trials = int(config.relax("trials", DEFAULT_TRIALS))
    rng = derive_rng(seed)
    rows: list[dict] = []

    for kind in (HamiltonianKind.WIGNER, HamiltonianKind.COVARIANCE):
        model = semicircle() if kind is HamiltonianKind.WIGNER else mp_singular(d)
        gamma = classical_locations(model, n)
        pp = PseudoPotential(gamma=gamma, r=r)
        lo, hi = model.support

        for beta in AUDIT_BETAS:
            spec = HamiltonianSpec(kind=kind, beta=beta, n=n, d=d if kind is HamiltonianKind.COVARIANCE else None)

            for trial in range(trials):
                x = _random_configuration(rng, max(lo, 1e-3) if kind is HamiltonianKind.COVARIANCE else lo, hi, n)
                v = rng.standard_normal(n)
                interlacing: bool | None = None
                if kind is HamiltonianKind.COVARIANCE and beta in _COVARIANCE_KINDS:
                    interlacing = _interlacing_ok(
                        _COVARIANCE_KINDS[beta], n, d, derive_seed(seed, 100 * beta + trial)
                    )

                rows.append(
                    {
                        "seed": seed,
                        "kind": kind.value,
                        "beta": beta,
                        "trial": trial,
                        "convex_slack": convex_bound_slack(spec, x, v),
                        "relaxation_slack": relaxation_bound_slack(spec, pp, x, v),
                        "control_slack": relaxation_bound_slack(
                            spec, pp, x, v, include_pseudo=False, u_second_derivative=0.0
                        ),
                        "interlacing_ok": interlacing,
                    }
                )

    return rows


def summarize_hessian_audit(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    interlacing = frame["interlacing_ok"].dropna().astype(bool)

    return {
        "trials": int(len(frame)),
        "min_convex_slack": float(frame["convex_slack"].min()),
        "min_relaxation_slack": float(frame["relaxation_slack"].min()),
        "convex_violations": int((frame["convex_slack"] < -SLACK_TOL).sum()),
        "relaxation_violations": int((frame["relaxation_slack"] < -SLACK_TOL).sum()),
        "control_failure_fraction": float((frame["control_slack"] < -SLACK_TOL).mean()),
        "interlacing_checks": int(interlacing.size),
        "interlacing_failures": int((~interlacing).sum()),
    }
