from __future__ import annotations

__all__ = [
    "EXPERIMENT_NAMES",
    "TOP_LEVEL_KEYS",
    "ENSEMBLE_KEYS",
    "FLOW_KEYS",
    "SEED_KEYS",
    "STATISTICS_KEYS",
    "REQUIRED_SECTIONS",
]

EXPERIMENT_NAMES: tuple[str, ...] = (
    "semicircle",
    "mp-law",
    "local-law",
    "rigidity",
    "dbm-relax",
    "gaps",
    "correlations",
    "counting-tail",
    "reverse-flow",
    "entropy-decay",
    "hessian-audit",
)

TOP_LEVEL_KEYS: frozenset[str] = frozenset(
    {
        "experiment",
        "ensemble",
        "flow",
        "statistics",
        "relaxation",
        "seeds",
        "workers",
        "output_dir",
    }
)
ENSEMBLE_KEYS: frozenset[str] = frozenset({"kind", "n", "m", "d", "entry_dist"})
FLOW_KEYS: frozenset[str] = frozenset(
    {"drift", "beta", "dt", "horizon", "r", "base", "collision_floor", "sample_times"}
)
SEED_KEYS: frozenset[str] = frozenset({"count", "base"})

## Sections an experiment cannot run without
REQUIRED_SECTIONS: dict[str, tuple[str, ...]] = {
    "semicircle": ("ensemble",),
    "mp-law": ("ensemble",),
    "local-law": ("ensemble",),
    "rigidity": ("ensemble",),
    "dbm-relax": ("ensemble", "flow"),
    "gaps": ("ensemble",),
    "correlations": ("ensemble",),
    "counting-tail": ("ensemble",),
    "reverse-flow": (),
    "entropy-decay": (),
    "hessian-audit": (),
}

## Estimator parameters each experiment reads from `statistics`
STATISTICS_KEYS: dict[str, frozenset[str]] = {
    "semicircle": frozenset(),
    "mp-law": frozenset(),
    "local-law": frozenset({"e", "eta_exponents", "tolerance"}),
    "rigidity": frozenset(),
    "dbm-relax": frozenset({"e", "ell", "delta"}),
    "gaps": frozenset({"tau", "e", "ell", "delta"}),
    "correlations": frozenset(
        {"tau", "order", "e", "b", "anchors", "anchor_edges", "separation_edges"}
    ),
    "counting-tail": frozenset({"e", "expected_count", "k_grid"}),
    "reverse-flow": frozenset(),
    "entropy-decay": frozenset(),
    "hessian-audit": frozenset(),
}
