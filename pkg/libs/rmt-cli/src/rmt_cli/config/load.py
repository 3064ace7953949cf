from __future__ import annotations

import copy
import json
from pathlib import Path
import typing as t

from rmt_lab.exceptions import ConfigurationError

from .classes import ExperimentConfig
from .validators import config_from_dict

__all__ = ["read_config_document", "merge_overrides", "load_config"]


def read_config_document(path: t.Union[str, Path]) -> dict[str, t.Any]:
    """Parse a JSON experiment document without validating it.

    Raises:
        ConfigurationError: Missing or empty file, or a parse error reported with line/column.

    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f"config: file not found: {path}")

    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise ConfigurationError("schema: empty configuration document")

    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(
            f"parse: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def merge_overrides(doc: dict[str, t.Any], overrides: dict[str, t.Any]) -> dict[str, t.Any]:
    """Overlay `overrides` (possibly nested one level) onto a copy of `doc`."""
    merged = copy.deepcopy(doc)

    for key, value in overrides.items():
        if isinstance(value, dict):
            section = merged.get(key) or {}
            if not isinstance(section, dict):
                raise ConfigurationError(f"schema: '{key}' must be an object")
            merged[key] = {**section, **value}
        else:
            merged[key] = value

    return merged


def load_config(
    path: t.Union[str, Path] | None = None, overrides: dict[str, t.Any] | None = None
) -> ExperimentConfig:
    doc = read_config_document(path) if path is not None else {}

    return config_from_dict(merge_overrides(doc, overrides or {}))
