from __future__ import annotations

from dataclasses import replace
from pathlib import Path
import typing as t

from rmt_lab.dynamics import FlowConfig
from rmt_lab.exceptions import ConfigurationError
from rmt_lab.utils import validate_seed

from .classes import ExperimentConfig, SeedPlan
from .constants import (
    ENSEMBLE_KEYS,
    EXPERIMENT_NAMES,
    FLOW_KEYS,
    REQUIRED_SECTIONS,
    SEED_KEYS,
    STATISTICS_KEYS,
    TOP_LEVEL_KEYS,
)

from loguru import logger as log
import numpy as np

__all__ = ["validate_experiment_name", "config_from_dict", "flow_config_from_section"]


def _is_int(value: t.Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _check_keys(section: str, value: t.Any, allowed: frozenset[str]) -> dict:
    if not isinstance(value, dict):
        raise ConfigurationError(f"schema: '{section}' must be an object")

    unknown = sorted(set(value) - allowed)
    if unknown:
        raise ConfigurationError(f"schema: unknown key '{unknown[0]}' in '{section}'")

    return value


def validate_experiment_name(name: t.Any) -> str:
    if not isinstance(name, str) or name not in EXPERIMENT_NAMES:
        raise ConfigurationError(f"unknown experiment '{name}'")

    return name


def _validate_ensemble(ensemble: dict) -> dict:
    _check_keys("ensemble", ensemble, ENSEMBLE_KEYS)

    n = ensemble.get("n")
    sizes = n if isinstance(n, list) else [n]
    if not sizes or not all(_is_int(v) and v >= 1 for v in sizes):
        raise ConfigurationError(f"ensemble: n must be a positive integer or a list of them, got {n}")

    d = ensemble.get("d")
    if d is not None:
        if isinstance(d, bool) or not isinstance(d, (int, float)) or not 0 < d < 1:
            raise ConfigurationError(f"ensemble: dimension ratio d={d} violates 0<d<1")
        if ensemble.get("m") is not None:
            raise ConfigurationError("ensemble: give either m or d, not both")

    m = ensemble.get("m")
    if m is not None and not (_is_int(m) and m >= 1):
        raise ConfigurationError(f"ensemble: m must be a positive integer, got {m}")

    return ensemble


def flow_config_from_section(
    flow: dict, beta: float, gamma: np.ndarray | None = None, d: float | None = None, seed: int = 0
) -> FlowConfig:
    """Build a FlowConfig from a `flow` section (sample_times is not a FlowConfig field)."""
    fields = {k: v for k, v in flow.items() if k != "sample_times"}
    fields.setdefault("drift", "dbm")
    fields.setdefault("beta", beta)
    if d is not None:
        fields.setdefault("d", d)

    return FlowConfig(gamma=gamma, seed=seed, **fields)


def _validate_flow(flow: dict, config: ExperimentConfig) -> dict:
    _check_keys("flow", flow, FLOW_KEYS)

    try:
        spec = config.ensemble_spec()
        parsed = flow_config_from_section(
            flow, beta=spec.beta, gamma=np.zeros(spec.n), d=spec.d
        )
    except TypeError as exc:
        raise ConfigurationError(f"flow: {exc}") from exc

    times = flow.get("sample_times")
    if times is not None:
        if not isinstance(times, list) or not times:
            raise ConfigurationError("flow: sample_times must be a non-empty list")
        arr = np.asarray(times, dtype=float)
        if np.any(np.diff(arr) <= 0) or arr[0] < 0 or arr[-1] > parsed.horizon:
            raise ConfigurationError(
                f"flow: sample_times must increase within [0, horizon={parsed.horizon:g}]"
            )

    return flow


def _validate_seeds(seeds: t.Any) -> SeedPlan:
    if seeds is None:
        return SeedPlan()
    if _is_int(seeds):
        seeds = {"count": seeds}

    _check_keys("seeds", seeds, SEED_KEYS)
    count = seeds.get("count", 1)
    base = seeds.get("base", 0)

    if not _is_int(count) or count < 1:
        raise ConfigurationError(f"seeds: count must be a positive integer, got {count}")
    try:
        base = validate_seed(base)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"seeds: {exc}") from exc

    return SeedPlan(count=count, base=base)


def config_from_dict(doc: t.Any) -> ExperimentConfig:
    """Validate an experiment document and return the typed config.

    Raises:
        ConfigurationError: With a single-line reason naming the offending section.

    """
    if not isinstance(doc, dict):
        raise ConfigurationError("schema: top-level value must be an object")
    if not doc:
        raise ConfigurationError("schema: empty configuration document")

    _check_keys("document", doc, TOP_LEVEL_KEYS)
    if "experiment" not in doc:
        raise ConfigurationError("schema: missing required key 'experiment'")
    name = validate_experiment_name(doc["experiment"])

    for section in REQUIRED_SECTIONS[name]:
        if doc.get(section) is None:
            raise ConfigurationError(f"schema: experiment '{name}' requires a '{section}' section")

    workers = doc.get("workers", 1)
    if not _is_int(workers) or workers < 1:
        raise ConfigurationError(f"schema: workers must be a positive integer, got {workers}")

    if not isinstance(doc.get("relaxation", {}), dict):
        raise ConfigurationError("schema: 'relaxation' must be an object")
    statistics = _check_keys("statistics", doc.get("statistics", {}), STATISTICS_KEYS[name])

    output_dir = doc.get("output_dir", "output")
    if not isinstance(output_dir, str) or not output_dir:
        raise ConfigurationError("schema: output_dir must be a non-empty string")

    ensemble = doc.get("ensemble")
    config = ExperimentConfig(
        experiment=name,
        ensemble=_validate_ensemble(ensemble) if ensemble is not None else {},
        statistics=dict(statistics),
        relaxation=dict(doc.get("relaxation", {})),
        seeds=_validate_seeds(doc.get("seeds")),
        workers=workers,
        output_dir=Path(output_dir),
    )

    ## EnsembleSpec enforces kind names and 0<d<1 for every size
    for n in config.sizes:
        config.ensemble_spec(n)

    flow = doc.get("flow")
    if flow is not None:
        if not config.ensemble:
            raise ConfigurationError("schema: a 'flow' section needs an 'ensemble' section")
        config = replace(config, flow=_validate_flow(flow, config))

    log.debug(f"Validated '{name}' config: {config.seeds.count} seed(s), sizes={config.sizes}")

    return config
