from __future__ import annotations

from rmt_cli.config import EXPERIMENT_NAMES

from .audits import hessian_audit_seed, summarize_hessian_audit
from .classes import Experiment
from .flows import dbm_relax_seed, summarize_dbm_relax
from .global_laws import mp_law_seed, semicircle_seed, summarize_global_law
from .grid_solvers import (
    entropy_decay_run,
    reverse_flow_run,
    summarize_entropy_decay,
    summarize_reverse_flow,
)
from .local_law import local_law_seed, summarize_local_law
from .local_stats import (
    correlations_seed,
    counting_tail_seed,
    gaps_seed,
    reduce_correlations,
    reduce_counting_tail,
    summarize_correlations,
    summarize_counting_tail,
    summarize_gaps,
)
from .rigidity import reduce_rigidity, rigidity_seed, summarize_rigidity

__all__ = ["EXPERIMENTS", "get_experiment"]

EXPERIMENTS: dict[str, Experiment] = {
    exp.name: exp
    for exp in (
        Experiment("semicircle", summarize_global_law, per_seed=semicircle_seed),
        Experiment("mp-law", summarize_global_law, per_seed=mp_law_seed),
        Experiment("local-law", summarize_local_law, per_seed=local_law_seed),
        Experiment("rigidity", summarize_rigidity, per_seed=rigidity_seed, reduce=reduce_rigidity),
        Experiment("dbm-relax", summarize_dbm_relax, per_seed=dbm_relax_seed),
        Experiment("gaps", summarize_gaps, per_seed=gaps_seed),
        Experiment(
            "correlations", summarize_correlations, per_seed=correlations_seed, reduce=reduce_correlations
        ),
        Experiment(
            "counting-tail",
            summarize_counting_tail,
            per_seed=counting_tail_seed,
            reduce=reduce_counting_tail,
        ),
        Experiment("reverse-flow", summarize_reverse_flow, deterministic=reverse_flow_run),
        Experiment("entropy-decay", summarize_entropy_decay, deterministic=entropy_decay_run),
        Experiment("hessian-audit", summarize_hessian_audit, per_seed=hessian_audit_seed),
    )
}

if set(EXPERIMENTS) != set(EXPERIMENT_NAMES):
    raise RuntimeError(f"Experiment registry out of sync: {sorted(set(EXPERIMENTS) ^ set(EXPERIMENT_NAMES))}")


def get_experiment(name: str) -> Experiment:
    """Look up a registered experiment.

    Raises:
        KeyError: Unknown name (validated configs never hit this).

    """
    return EXPERIMENTS[name]
