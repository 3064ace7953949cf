from __future__ import annotations

from pathlib import Path

from rmt_lab.io import (
    CHECKPOINT_MAGIC,
    load_csv,
    load_json,
    load_pq,
    read_checkpoint,
    save_csv,
    save_json,
    save_pq,
    write_checkpoint,
)

import numpy as np
import pandas as pd
import pytest

__all__ = [
    "test_save_csv_uses_crlf",
    "test_save_json_sorts_keys",
    "test_save_pq",
    "test_load_rejects_wrong_suffix",
    "test_checkpoint_layout",
    "test_checkpoint_rejects_bad_magic",
]


def test_save_csv_uses_crlf(tmp_path: Path):
    df = pd.DataFrame({"seed": [1, 2], "value": [0.5, -1.25]})

    path = save_csv(df, tmp_path / "results")

    assert path.suffix == ".csv"
    raw = path.read_bytes()
    assert raw.startswith(b"seed,value\r\n")
    assert raw.count(b"\r\n") == 3
    assert load_csv(path).equals(df)
    assert save_csv(None, tmp_path / "none.csv") is None


def test_save_json_sorts_keys(tmp_path: Path):
    path = save_json({"b": 1, "a": [1.5, 2]}, tmp_path / "nested" / "summary.json")

    text = path.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert load_json(path) == {"a": [1.5, 2], "b": 1}


def test_save_pq(tmp_path: Path):
    df = pd.DataFrame({"k": np.arange(4), "value": np.linspace(0.0, 1.0, 4)})

    path = save_pq(df, tmp_path / "spectra.parquet")

    assert load_pq(path).equals(df)
    assert save_pq(pd.DataFrame(), tmp_path / "empty.parquet") is None


def test_load_rejects_wrong_suffix(tmp_path: Path):
    with pytest.raises(ValueError):
        load_csv(tmp_path / "results.txt")
    with pytest.raises(FileNotFoundError):
        load_json(tmp_path / "missing.json")


def test_checkpoint_layout(tmp_path: Path):
    times = np.array([0.0, 0.5])
    states = np.array([[-1.0, 0.0, 1.0], [-0.9, 0.1, 1.2]])

    path = write_checkpoint(tmp_path / "traj.bin", times, states)
    raw = path.read_bytes()

    assert raw[:8] == CHECKPOINT_MAGIC
    assert np.frombuffer(raw, dtype="<u4", count=2, offset=8).tolist() == [3, 2]
    assert len(raw) == 8 + 8 + 8 * (2 + 6)

    loaded_times, loaded_states = read_checkpoint(path)
    assert np.array_equal(loaded_times, times)
    assert np.array_equal(loaded_states, states)

    with pytest.raises(ValueError):
        write_checkpoint(tmp_path / "bad.bin", times, states[:1])


def test_checkpoint_rejects_bad_magic(tmp_path: Path):
    path = tmp_path / "other.bin"
    path.write_bytes(b"NOTATRAJ" + bytes(16))

    with pytest.raises(ValueError):
        read_checkpoint(path)
