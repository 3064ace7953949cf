from __future__ import annotations

import json
from pathlib import Path
import typing as t

from .constants import CSV_ENCODING, PANDAS_ENGINE

from loguru import logger as log
import pandas as pd

__all__ = ["load_csv", "load_json", "load_pq"]


def _existing(path: t.Union[str, Path], suffix: str) -> Path:
    if path is None:
        raise ValueError(f"Missing {suffix} file to load")
    if isinstance(path, str):
        path: Path = Path(path)

    if path.suffix != suffix:
        raise ValueError(f"Invalid file path: '{path}'. Must end in '{suffix}'")
    if not path.exists():
        raise FileNotFoundError(f"Could not find file '{path}'")

    return path


def load_csv(csv_file: t.Union[str, Path] = None) -> pd.DataFrame:
    """Return a DataFrame from a previously saved .csv file."""
    csv_file = _existing(csv_file, ".csv")

    try:
        return pd.read_csv(csv_file, encoding=CSV_ENCODING)
    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception loading CSV file '{csv_file}'. Details: {exc}"
        log.error(msg)

        raise exc


def load_json(json_file: t.Union[str, Path] = None) -> t.Any:
    """Return the decoded contents of a .json file (dicts stay dicts)."""
    json_file = _existing(json_file, ".json")

    try:
        with open(json_file, "r", encoding="utf-8") as f:
            return json.load(f)
    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception loading JSON file '{json_file}'. Details: {exc}"
        log.error(msg)

        raise exc


def load_pq(
    pq_file: t.Union[str, Path] = None, pq_engine: str = PANDAS_ENGINE
) -> pd.DataFrame:
    """Return a DataFrame from a previously saved .parquet file."""
    pq_file = _existing(pq_file, ".parquet")

    try:
        return pd.read_parquet(pq_file, engine=pq_engine)
    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception loading parquet file '{pq_file}'. Details: {exc}"
        log.error(msg)

        raise exc
