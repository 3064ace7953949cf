from __future__ import annotations

__all__ = [
    "EXIT_OK",
    "EXIT_NUMERIC",
    "EXIT_USAGE",
    "SCHEMA_VERSION",
    "RESULTS_FILE",
    "SUMMARY_FILE",
    "META_LOG_FILE",
    "DEFAULT_OUTPUT_DIR",
    "VALIDATE_COMMAND",
]

EXIT_OK: int = 0
EXIT_NUMERIC: int = 1
EXIT_USAGE: int = 2

SCHEMA_VERSION: int = 1

RESULTS_FILE: str = "results.csv"
SUMMARY_FILE: str = "summary.json"
META_LOG_FILE: str = "meta.log"
DEFAULT_OUTPUT_DIR: str = "output"

VALIDATE_COMMAND: str = "validate"
