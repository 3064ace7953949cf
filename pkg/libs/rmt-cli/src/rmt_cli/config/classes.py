from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
import typing as t

from rmt_lab.ensembles import EnsembleSpec
from rmt_lab.utils import derive_seed

__all__ = ["SeedPlan", "ExperimentConfig"]


@dataclass(frozen=True)
class SeedPlan:
    """`count` seeds derived from `base` through SeedSequence spawn keys 0..count-1."""

    count: int = 1
    base: int = 0

    def seeds(self) -> list[tuple[int, int]]:
        """`(index, seed)` pairs in canonical order."""
        return [(k, derive_seed(self.base, k)) for k in range(self.count)]

    def provenance(self) -> list[dict[str, t.Any]]:
        return [
            {"index": k, "seed": seed, "stream": [self.base, k]} for k, seed in self.seeds()
        ]

    def as_dict(self) -> dict[str, int]:
        return {"count": self.count, "base": self.base}


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment document.

    Params:
        experiment (str): One of the registered experiment names.
        ensemble (dict): EnsembleSpec fields; `n` may be a list of sizes, `d` may replace `m`.
        flow (dict|None): FlowConfig fields plus `sample_times`.
        statistics (dict): Estimator parameters, restricted per experiment to `STATISTICS_KEYS`.
        relaxation (dict): Grid-solver parameters (orders, times, radii, ...).
        seeds (SeedPlan): Seed count and base seed.
        workers (int): Worker processes; results do not depend on it.
        output_dir (Path): Artifact directory.

    """

    experiment: str
    ensemble: dict[str, t.Any] = field(default_factory=dict)
    flow: dict[str, t.Any] | None = None
    statistics: dict[str, t.Any] = field(default_factory=dict)
    relaxation: dict[str, t.Any] = field(default_factory=dict)
    seeds: SeedPlan = field(default_factory=SeedPlan)
    workers: int = 1
    output_dir: Path = Path("output")

    @property
    def sizes(self) -> list[int]:
        n = self.ensemble.get("n", [])
        sizes = n if isinstance(n, (list, tuple)) else [n]

        return [int(v) for v in sizes]

    def _rows_for(self, n: int) -> int | None:
        if self.ensemble.get("m") is not None:
            return int(self.ensemble["m"])
        if self.ensemble.get("d") is not None:
            return int(round(n / float(self.ensemble["d"])))

        return None

    def ensemble_spec(self, n: int | None = None, seed: int = 0) -> EnsembleSpec:
        """EnsembleSpec for size `n` (default: the first size)."""
        n = self.sizes[0] if n is None else int(n)

        return EnsembleSpec(
            kind=self.ensemble.get("kind", "wigner-hermitian"),
            n=n,
            m=self._rows_for(n),
            entry_dist=self.ensemble.get("entry_dist", "gaussian"),
            seed=seed,
        )

    def stat(self, key: str, default: t.Any = None) -> t.Any:
        return self.statistics.get(key, default)

    def relax(self, key: str, default: t.Any = None) -> t.Any:
        return self.relaxation.get(key, default)

    def with_workers(self, workers: int) -> "ExperimentConfig":
        return replace(self, workers=int(workers))

    def as_dict(self) -> dict[str, t.Any]:
        return {
            "experiment": self.experiment,
            "ensemble": dict(self.ensemble),
            "flow": None if self.flow is None else dict(self.flow),
            "statistics": dict(self.statistics),
            "relaxation": dict(self.relaxation),
            "seeds": self.seeds.as_dict(),
            "workers": self.workers,
            "output_dir": str(self.output_dir),
        }
