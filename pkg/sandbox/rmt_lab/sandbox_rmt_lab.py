# /// script
# requires-python = ">=3.11"
# dependencies = [
#     "loguru",
#     "numpy",
#     "pandas",
#     "rmt-lab",
# ]
#
# [tool.uv.sources]
# rmt-lab = { path = "../../libs/rmt-lab" }
# ///
from __future__ import annotations

from functools import partial

from loguru import logger as log
import numpy as np
import pandas as pd
from rmt_lab.density import cdf, classical_locations, semicircle, stieltjes_mw
from rmt_lab.dynamics import FlowConfig, rigidity_q, run_flow
from rmt_lab.ensembles import EnsembleSpec, sample, spectrum
from rmt_lab.setup import setup_loguru_logging
from rmt_lab.statistics import gap_statistics, ks_distance

if __name__ == "__main__":
    setup_loguru_logging(log_level="DEBUG", enable_loggers=["rmt_lab"], log_fmt="basic")

    log.info("rmt_lab sandbox")

    model = semicircle()
    spec = EnsembleSpec(kind="wigner-symmetric", n=400, entry_dist="rademacher", seed=1)
    points = spectrum(sample(spec))
    log.info(f"GOE-class spectrum: min={points.values[0]:.4f}, max={points.values[-1]:.4f}")
    log.info(f"KS distance to the semicircle: {ks_distance(points.values, partial(cdf, model)):.4f}")

    z = 0.5 + 0.01j
    empirical = np.mean(1.0 / (points.values - z))
    log.info(f"m(z) at z={z}: empirical={empirical:.4f}, limit={stieltjes_mw(model, z).value:.4f}")

    gamma = classical_locations(model, spec.n)
    flow = FlowConfig(drift="dbm", beta=1.0, dt=1e-3, horizon=0.05, seed=2)
    trajectory = run_flow(points, flow, [0.0, 0.025, 0.05])
    log.info(f"Rigidity sum along the flow: {rigidity_q(trajectory, gamma)}")

    stats = gap_statistics(trajectory.final, model, e=0.0, ell=0.2)
    gaps = pd.Series(stats.rescaled_gaps, name="gap")
    log.info(f"Rescaled bulk gaps ({stats.window_count} in window):\n{gaps.describe()}")
