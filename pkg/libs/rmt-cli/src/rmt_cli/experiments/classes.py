from __future__ import annotations

from dataclasses import dataclass
import typing as t

import pandas as pd

if t.TYPE_CHECKING:
    from rmt_cli.config import ExperimentConfig

__all__ = ["Experiment"]

Rows = list[dict[str, t.Any]]


@dataclass(frozen=True)
class Experiment:
    """A named experiment.

    Params:
        name (str): CLI name.
        summarize (Callable): `(frame, config) -> dict` of metrics for summary.json.
        per_seed (Callable|None): `(config, seed) -> rows`, run once per seed on the worker pool.
        deterministic (Callable|None): `(config) -> rows`, run once in the parent process.
        reduce (Callable|None): `(frame, config) -> frame` applied to the merged rows.

    """

    name: str
    summarize: t.Callable[[pd.DataFrame, "ExperimentConfig"], dict[str, t.Any]]
    per_seed: t.Callable[["ExperimentConfig", int], Rows] | None = None
    deterministic: t.Callable[["ExperimentConfig"], Rows] | None = None
    reduce: t.Callable[[pd.DataFrame, "ExperimentConfig"], pd.DataFrame] | None = None

    def __post_init__(self):
        if (self.per_seed is None) == (self.deterministic is None):
            raise ValueError(f"Experiment '{self.name}' needs exactly one of per_seed/deterministic")

    @property
    def is_per_seed(self) -> bool:
        return self.per_seed is not None
