from __future__ import annotations

import typing as t

from rmt_lab.density import (
    empirical_stieltjes,
    interlacing_error,
    self_consistent_residual,
    stieltjes_mw,
)
from rmt_lab.ensembles import minor_spectrum, sample, spectrum

from .common import eigenvalue_law, require_covariance

import numpy as np
import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["local_law_seed", "summarize_local_law"]

DEFAULT_ENERGY: float = 1.5
DEFAULT_ETA_EXPONENTS: tuple[float, ...] = (0.8, 0.5)
DEFAULT_TOLERANCE: float = 0.1


def local_law_seed(config: "ExperimentConfig", seed: int) -> list[dict]:
    """|m_N(z) - m_W(z)| at z = E + i N^-a for each configured exponent a."""
    e = float(config.stat("e", DEFAULT_ENERGY))
    exponents = [float(a) for a in config.stat("eta_exponents", DEFAULT_ETA_EXPONENTS)]
    rows = []

    for n in config.sizes:
        spec = config.ensemble_spec(n, seed=seed)
        require_covariance(spec, "local-law")
        model = eigenvalue_law(spec)

        matrix = sample(spec)
        eigenvalues = spectrum(matrix).squared
        minor = minor_spectrum(matrix, drop_index=1).squared

        for a in exponents:
            z = complex(e, n ** (-a))
            m_n = empirical_stieltjes(eigenvalues, z).value
            m_w = stieltjes_mw(model, z).value

            rows.append(
                {
                    "seed": seed,
                    "n": n,
                    "eta_exponent": a,
                    "eta": z.imag,
                    "abs_error": abs(m_n - m_w),
                    "residual": abs(self_consistent_residual(model, z, m_n)),
                    "interlacing": interlacing_error(eigenvalues, minor, z),
                }
            )

    return rows


def summarize_local_law(frame: pd.DataFrame, config: "ExperimentConfig") -> dict[str, t.Any]:
    tol = float(config.stat("tolerance", DEFAULT_TOLERANCE))
    metrics: dict[str, t.Any] = {"tolerance": tol, "by_exponent": {}}

    for a, group in frame.groupby("eta_exponent"):
        per_n = {}
        for n, sub in group.groupby("n"):
            per_n[str(int(n))] = {
                "fraction_within": float(np.mean(sub["abs_error"] <= tol)),
                "p95": float(np.percentile(sub["abs_error"], 95)),
                "median": float(np.median(sub["abs_error"])),
            }

        sizes = sorted(int(n) for n in group["n"].unique())
        entry: dict[str, t.Any] = {"by_n": per_n}
        if len(sizes) > 1:
            first, last = per_n[str(sizes[0])]["p95"], per_n[str(sizes[-1])]["p95"]
            entry["p95_shrink"] = float(1.0 - last / first) if first > 0 else None
        metrics["by_exponent"][f"{a:g}"] = entry

    metrics["interlacing_max"] = float(frame["interlacing"].max())
    metrics["interlacing_bounded"] = bool(frame["interlacing"].max() <= np.pi + 1e-9)

    return metrics
