from __future__ import annotations

import json
from pathlib import Path
import typing as t

from .constants import CSV_ENCODING, CSV_LINE_TERMINATOR, PANDAS_ENGINE

from loguru import logger as log
import pandas as pd

__all__ = [
    "save_csv",
    "save_json",
    "save_pq",
]


def _ensure_suffix(path: t.Union[str, Path], suffix: str) -> Path:
    if path is None:
        raise ValueError("Missing output path")
    if isinstance(path, str):
        path: Path = Path(path)

    if path.suffix != suffix:
        path = Path(f"{path}{suffix}")

    if not path.parent.exists():
        try:
            path.parent.mkdir(exist_ok=True, parents=True)
        except Exception as exc:
            msg = f"({type(exc)}) Unhandled exception creating directory: {path.parent}. Details: {exc}"
            log.error(msg)

            raise exc

    return path


def save_csv(
    df: pd.DataFrame = None,
    csv_file: t.Union[str, Path] = None,
    columns: list[str] | None = None,
) -> Path | None:
    """Save DataFrame to an RFC-4180 .csv file (UTF-8, `.` decimal, CRLF records, no index).

    Params:
        df (pandas.DataFrame): A Pandas `DataFrame` to save
        csv_file (str|Path): The path to a `.csv` file where the `DataFrame` should be saved
        columns (list[str]): Optional column selection/order

    Returns:
        (Path): The path written to
        (None): When the `DataFrame` is `None`

    Raises:
        Exception: If file cannot be saved, an `Exception` is raised

    """
    if df is None:
        log.warning("DataFrame is None, nothing to save")

        return None

    csv_file = _ensure_suffix(csv_file, ".csv")

    try:
        df.to_csv(
            csv_file,
            columns=columns,
            index=False,
            encoding=CSV_ENCODING,
            lineterminator=CSV_LINE_TERMINATOR,
        )
        log.debug(f"Saved [{len(df)}] row(s) to {csv_file}")

        return csv_file

    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception saving DataFrame to CSV file: {csv_file}. Details: {exc}"
        log.error(msg)

        raise exc


def save_json(
    data: t.Union[pd.DataFrame, dict, list] = None,
    json_file: t.Union[str, Path] = None,
    indent: int | None = 2,
) -> Path | None:
    """Save a DataFrame (as records) or a plain dict/list to a .json file.

    Params:
        data (pandas.DataFrame|dict|list): The payload. Dict keys are written sorted.
        json_file (str|Path): The path to a `.json` file

    Returns:
        (Path): The path written to

    Raises:
        Exception: If file cannot be saved, an `Exception` is raised

    """
    if data is None:
        log.warning("Nothing to save")

        return None

    json_file = _ensure_suffix(json_file, ".json")

    try:
        if isinstance(data, pd.DataFrame):
            data.to_json(json_file, orient="records", indent=indent)
        else:
            with open(json_file, "w", encoding="utf-8") as f:
                json.dump(data, f, indent=indent, sort_keys=True, allow_nan=True)
                f.write("\n")

        return json_file

    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception saving JSON file: {json_file}. Details: {exc}"
        log.error(msg)

        raise exc


def save_pq(
    df: pd.DataFrame = None,
    pq_file: t.Union[str, Path] = None,
    pq_engine: str = PANDAS_ENGINE,
) -> Path | None:
    """Save DataFrame to a .parquet file.

    Params:
        df (pandas.DataFrame): A Pandas `DataFrame` to save
        pq_file (str|Path): The path to a `.parquet` file where the `DataFrame` should be saved

    Returns:
        (Path): The path written to

    Raises:
        Exception: If file cannot be saved, an `Exception` is raised

    """
    if df is None or df.empty:
        log.warning("DataFrame is None or empty")

        return None

    pq_file = _ensure_suffix(pq_file, ".parquet")

    try:
        df.to_parquet(path=pq_file, engine=pq_engine, index=False)

        return pq_file

    except Exception as exc:
        msg = f"({type(exc)}) Unhandled exception saving DataFrame to Parquet file: {pq_file}. Details: {exc}"
        log.error(msg)

        raise exc
