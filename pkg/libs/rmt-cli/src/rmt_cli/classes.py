from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
import typing as t

__all__ = ["RunResult"]


@dataclass(frozen=True)
class RunResult:
    """Where a run wrote its artifacts, plus the metrics echoed into summary.json."""

    experiment: str
    output_dir: Path
    results_file: Path
    summary_file: Path
    meta_log_file: Path
    rows: int
    metrics: dict[str, t.Any] = field(default_factory=dict)
