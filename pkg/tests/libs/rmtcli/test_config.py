from __future__ import annotations

from pathlib import Path

from rmt_cli.config import (
    EXPERIMENT_NAMES,
    ExperimentConfig,
    SeedPlan,
    config_from_dict,
    load_config,
    merge_overrides,
    read_config_document,
)
from rmt_cli.helpers import overrides_from_args, parse_args
from rmt_lab.exceptions import ConfigurationError

from .fixtures import EXPERIMENTS_DIR, write_doc

import pytest

__all__ = [
    "test_shipped_documents_validate",
    "test_empty_document_rejected",
    "test_parse_error_reports_position",
    "test_missing_file_rejected",
    "test_invalid_ratio_rejected",
    "test_unknown_key_rejected",
    "test_unknown_statistics_key_rejected",
    "test_unknown_experiment_rejected",
    "test_dbm_relax_requires_flow",
    "test_sample_times_within_horizon",
    "test_seed_plan_from_int",
    "test_seed_plan_provenance",
    "test_ratio_sets_rows",
    "test_merge_overrides_nested",
    "test_overrides_route_beta",
    "test_parse_args_usage_errors",
]


@pytest.mark.parametrize("name", EXPERIMENT_NAMES)
def test_shipped_documents_validate(name: str):
    config = load_config(EXPERIMENTS_DIR / f"{name}.json")

    assert config.experiment == name


def test_empty_document_rejected(tmp_path: Path):
    path = write_doc(tmp_path / "empty.json", "  \n")

    with pytest.raises(ConfigurationError, match="schema: empty configuration document"):
        load_config(path)

    path = write_doc(tmp_path / "braces.json", "{}")
    with pytest.raises(ConfigurationError, match="empty configuration document"):
        load_config(path)


def test_parse_error_reports_position(tmp_path: Path):
    path = write_doc(tmp_path / "broken.json", '{\n  "experiment": "semicircle",\n  "seeds": \n}')

    with pytest.raises(ConfigurationError) as exc_info:
        read_config_document(path)

    assert str(exc_info.value.reason).startswith("parse: ")
    assert "line 4 column 1" in str(exc_info.value.reason)


def test_missing_file_rejected(tmp_path: Path):
    with pytest.raises(ConfigurationError, match="file not found"):
        read_config_document(tmp_path / "absent.json")


def test_invalid_ratio_rejected():
    doc = {"experiment": "mp-law", "ensemble": {"kind": "covariance-real", "n": 10, "d": 1.5}}

    with pytest.raises(ConfigurationError, match="0<d<1"):
        config_from_dict(doc)


def test_unknown_key_rejected():
    doc = {"experiment": "semicircle", "ensemble": {"kind": "wigner-symmetric", "n": 10, "size": 3}}

    with pytest.raises(ConfigurationError, match="unknown key 'size' in 'ensemble'"):
        config_from_dict(doc)

    with pytest.raises(ConfigurationError, match="unknown key 'extra' in 'document'"):
        config_from_dict({"experiment": "reverse-flow", "extra": 1})


def test_unknown_statistics_key_rejected():
    ensemble = {"kind": "wigner-hermitian", "n": 20}

    ## Misspelled window width
    with pytest.raises(ConfigurationError, match="unknown key 'el' in 'statistics'"):
        config_from_dict({"experiment": "gaps", "ensemble": ensemble, "statistics": {"el": 0.1}})

    ## semicircle reads no estimator parameters
    with pytest.raises(ConfigurationError, match="unknown key 'e' in 'statistics'"):
        config_from_dict({"experiment": "semicircle", "ensemble": ensemble, "statistics": {"e": 0.0}})

    with pytest.raises(ConfigurationError, match="'statistics' must be an object"):
        config_from_dict({"experiment": "gaps", "ensemble": ensemble, "statistics": [0.1]})

    config = config_from_dict(
        {"experiment": "gaps", "ensemble": ensemble, "statistics": {"ell": 0.1, "tau": 0.1}}
    )
    assert config.statistics == {"ell": 0.1, "tau": 0.1}


def test_unknown_experiment_rejected():
    with pytest.raises(ConfigurationError, match="unknown experiment 'nope'"):
        config_from_dict({"experiment": "nope"})


def test_dbm_relax_requires_flow():
    doc = {"experiment": "dbm-relax", "ensemble": {"kind": "wigner-symmetric", "n": 20}}

    with pytest.raises(ConfigurationError, match="requires a 'flow' section"):
        config_from_dict(doc)

    config = config_from_dict({**doc, "flow": {"dt": 0.001, "horizon": 0.01}})
    assert config.flow == {"dt": 0.001, "horizon": 0.01}


def test_sample_times_within_horizon():
    doc = {
        "experiment": "dbm-relax",
        "ensemble": {"kind": "wigner-symmetric", "n": 20},
        "flow": {"dt": 0.001, "horizon": 0.01, "sample_times": [0.0, 0.02]},
    }

    with pytest.raises(ConfigurationError, match="sample_times"):
        config_from_dict(doc)


def test_seed_plan_from_int():
    config = config_from_dict({"experiment": "hessian-audit", "seeds": 3})

    assert config.seeds == SeedPlan(count=3, base=0)

    with pytest.raises(ConfigurationError, match="seeds: count"):
        config_from_dict({"experiment": "hessian-audit", "seeds": {"count": 0}})


def test_seed_plan_provenance():
    plan = SeedPlan(count=3, base=42)
    provenance = plan.provenance()

    assert [p["index"] for p in provenance] == [0, 1, 2]
    assert [p["stream"] for p in provenance] == [[42, 0], [42, 1], [42, 2]]
    ## Derived seeds are distinct and stable
    assert len({p["seed"] for p in provenance}) == 3
    assert provenance == SeedPlan(count=3, base=42).provenance()
    assert plan.seeds()[:2] == SeedPlan(count=2, base=42).seeds()


def test_ratio_sets_rows():
    config = config_from_dict(
        {"experiment": "mp-law", "ensemble": {"kind": "covariance-real", "n": [50, 100], "d": 0.25}}
    )

    assert isinstance(config, ExperimentConfig)
    assert config.sizes == [50, 100]
    assert config.ensemble_spec(100).m == 400
    assert config.ensemble_spec().n == 50


def test_merge_overrides_nested():
    doc = {"experiment": "gaps", "ensemble": {"kind": "wigner-symmetric", "n": 100}}
    merged = merge_overrides(doc, {"ensemble": {"n": 200}, "workers": 2})

    assert merged["ensemble"] == {"kind": "wigner-symmetric", "n": 200}
    assert merged["workers"] == 2
    assert doc["ensemble"]["n"] == 100


def test_overrides_route_beta():
    options = parse_args(["dbm-relax", "--n", "50,100", "--beta", "2", "--seeds", "3"])
    overrides = overrides_from_args(options)

    assert overrides["experiment"] == "dbm-relax"
    assert overrides["ensemble"] == {"n": [50, 100]}
    assert overrides["flow"] == {"beta": 2.0}
    assert overrides["seeds"] == {"count": 3}

    overrides = overrides_from_args(parse_args(["entropy-decay", "--beta", "2", "--r", "0.5"]))
    assert overrides["relaxation"] == {"beta": 2.0, "r": 0.5}
    assert "flow" not in overrides

    options = parse_args(["run", "gaps", "--n", "64"])
    assert options.command == "gaps"
    assert overrides_from_args(options)["ensemble"] == {"n": 64}


def test_parse_args_usage_errors():
    with pytest.raises(ConfigurationError, match="usage:"):
        parse_args(["validate"])

    with pytest.raises(ConfigurationError, match="usage:"):
        parse_args(["gaps", "--n", "a,b"])

    with pytest.raises(ConfigurationError, match="unexpected argument"):
        parse_args(["gaps", "extra"])
