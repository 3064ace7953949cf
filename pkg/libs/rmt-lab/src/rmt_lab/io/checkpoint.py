from __future__ import annotations

from pathlib import Path
import typing as t

from .constants import (
    CHECKPOINT_HEADER_DTYPE,
    CHECKPOINT_MAGIC,
    CHECKPOINT_VALUE_DTYPE,
)

from loguru import logger as log
import numpy as np

__all__ = ["write_checkpoint", "read_checkpoint"]


def write_checkpoint(
    path: t.Union[str, Path], times: np.ndarray, states: np.ndarray
) -> Path:
    """Write a trajectory checkpoint.

    Description:
        Layout (little-endian): 8-byte magic `RMTTRJ01`, uint32 N, uint32 T,
        float64[T] times, float64[T*N] states in row-major order.

    Params:
        path (str|Path): Output file.
        times (np.ndarray): Shape (T,).
        states (np.ndarray): Shape (T, N).

    Returns:
        (Path): The path written to.

    """
    path = Path(path)
    times = np.asarray(times, dtype=float)
    states = np.asarray(states, dtype=float)

    if states.ndim != 2 or states.shape[0] != times.shape[0]:
        raise ValueError(
            f"states must have shape (T, N) with T={times.shape[0]}, got {states.shape}"
        )

    n_times, n = states.shape
    header = np.array([n, n_times], dtype=CHECKPOINT_HEADER_DTYPE)

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(CHECKPOINT_MAGIC)
        f.write(header.tobytes())
        f.write(times.astype(CHECKPOINT_VALUE_DTYPE).tobytes())
        f.write(np.ascontiguousarray(states).astype(CHECKPOINT_VALUE_DTYPE).tobytes(order="C"))

    log.debug(f"Wrote checkpoint N={n} T={n_times} to {path}")

    return path


def read_checkpoint(path: t.Union[str, Path]) -> tuple[np.ndarray, np.ndarray]:
    """Read a checkpoint written by `write_checkpoint()`.

    Returns:
        (tuple[np.ndarray, np.ndarray]): `(times, states)`.

    Raises:
        ValueError: When the magic bytes or the payload size do not match.

    """
    raw: bytes = Path(path).read_bytes()
    magic_len = len(CHECKPOINT_MAGIC)

    if raw[:magic_len] != CHECKPOINT_MAGIC:
        raise ValueError(f"Not a trajectory checkpoint: {path}")

    n, n_times = (
        int(v)
        for v in np.frombuffer(raw, dtype=CHECKPOINT_HEADER_DTYPE, count=2, offset=magic_len)
    )
    offset = magic_len + 8
    expected = offset + 8 * (n_times + n_times * n)
    if len(raw) != expected:
        raise ValueError(
            f"Truncated checkpoint {path}: expected {expected} bytes, found {len(raw)}"
        )

    times = np.frombuffer(raw, dtype=CHECKPOINT_VALUE_DTYPE, count=n_times, offset=offset)
    states = np.frombuffer(
        raw,
        dtype=CHECKPOINT_VALUE_DTYPE,
        count=n_times * n,
        offset=offset + 8 * n_times,
    ).reshape(n_times, n)

    return times.astype(float), states.astype(float)
