from __future__ import annotations

__all__ = [
    "PANDAS_ENGINE",
    "CSV_LINE_TERMINATOR",
    "CSV_ENCODING",
    "CHECKPOINT_MAGIC",
    "CHECKPOINT_HEADER_DTYPE",
    "CHECKPOINT_VALUE_DTYPE",
]

PANDAS_ENGINE: str = "pyarrow"

## RFC-4180 record separator
CSV_LINE_TERMINATOR: str = "\r\n"
CSV_ENCODING: str = "utf-8"

## Trajectory checkpoint layout (little-endian):
#  8-byte magic | uint32 N | uint32 T | float64[T] times | float64[T*N] states (row-major)
CHECKPOINT_MAGIC: bytes = b"RMTTRJ01"
CHECKPOINT_HEADER_DTYPE: str = "<u4"
CHECKPOINT_VALUE_DTYPE: str = "<f8"
