from __future__ import annotations

from dataclasses import dataclass
import typing as t

import numpy as np
import pandas as pd

__all__ = ["GapStatistics", "CorrelationHistogram", "CorrelationEstimate"]


@dataclass(frozen=True, eq=False)
class GapStatistics:
    """Rescaled nearest-neighbour gaps around E and the gap density curve Lambda(E; s).

    Params:
        e (float): Center energy.
        ell (float): Window half-width.
        rho_e (float): rho(E) used for the rescaling.
        n (int): N used for the rescaling.
        rescaled_gaps (np.ndarray): N rho(E) (x_{j+1} - x_j) for |x_j - E| <= ell.
        s_grid (np.ndarray): Where Lambda is tabulated.
        lambda_curve (np.ndarray): Lambda(E; s) on `s_grid`.

    """

    e: float
    ell: float
    rho_e: float
    n: int
    rescaled_gaps: np.ndarray
    s_grid: np.ndarray
    lambda_curve: np.ndarray

    @property
    def window_count(self) -> int:
        return int(self.rescaled_gaps.size)

    @property
    def normalization(self) -> float:
        """2 N ell rho(E)."""
        return 2.0 * self.n * self.ell * self.rho_e

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"s": self.s_grid, "lambda": self.lambda_curve})


@dataclass(frozen=True, eq=False)
class CorrelationHistogram:
    """Integer tuple counts on a fixed grid, mergeable across workers.

    Description:
        `counts` and `squares` sum per-sample bin counts and their squares, so merging
        partial histograms is exact, associative and order independent.

    """

    order: int
    edges: tuple[np.ndarray, ...]
    counts: np.ndarray
    squares: np.ndarray
    n_samples: int
    n_anchors: int
    n_points: int

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(np.asarray(e, dtype=float) for e in self.edges))
        object.__setattr__(self, "counts", np.asarray(self.counts, dtype=np.int64))
        object.__setattr__(self, "squares", np.asarray(self.squares, dtype=np.int64))

    @classmethod
    def empty(
        cls, order: int, edges: t.Sequence[np.ndarray], n_anchors: int, n_points: int
    ) -> "CorrelationHistogram":
        shape = tuple(len(e) - 1 for e in edges)

        return cls(
            order=order,
            edges=tuple(edges),
            counts=np.zeros(shape, dtype=np.int64),
            squares=np.zeros(shape, dtype=np.int64),
            n_samples=0,
            n_anchors=n_anchors,
            n_points=n_points,
        )

    def is_compatible(self, other: "CorrelationHistogram") -> bool:
        return (
            self.order == other.order
            and self.n_anchors == other.n_anchors
            and self.n_points == other.n_points
            and len(self.edges) == len(other.edges)
            and all(np.array_equal(a, b) for a, b in zip(self.edges, other.edges))
        )

    def add_sample(self, counts: np.ndarray) -> "CorrelationHistogram":
        counts = np.asarray(counts, dtype=np.int64)

        return CorrelationHistogram(
            order=self.order,
            edges=self.edges,
            counts=self.counts + counts,
            squares=self.squares + counts * counts,
            n_samples=self.n_samples + 1,
            n_anchors=self.n_anchors,
            n_points=self.n_points,
        )

    def merge(self, other: "CorrelationHistogram") -> "CorrelationHistogram":
        if not self.is_compatible(other):
            raise ValueError("Cannot merge histograms with different order, grid or anchors")

        return CorrelationHistogram(
            order=self.order,
            edges=self.edges,
            counts=self.counts + other.counts,
            squares=self.squares + other.squares,
            n_samples=self.n_samples + other.n_samples,
            n_anchors=self.n_anchors,
            n_points=self.n_points,
        )

    @property
    def bin_volumes(self) -> np.ndarray:
        widths = [np.diff(e) for e in self.edges]
        vol = widths[0]
        for w in widths[1:]:
            vol = np.multiply.outer(vol, w)

        return vol


@dataclass(frozen=True, eq=False)
class CorrelationEstimate:
    """Rescaled n-point correlation averaged over E' in [E - b, E + b].

    Params:
        order (int): n.
        e (float): Center energy.
        b (float): Energy half-window.
        grid (tuple[np.ndarray, ...]): Bin edges; first axis is the anchor N rho(E)(x_{i1} - E'),
            the others the separations N rho(E)(x_{i1} - x_{ik}).
        values (np.ndarray): Estimated correlation per bin.
        stderr (np.ndarray): Standard error across samples.
        low_statistics (bool): A flat correlation would put fewer than 20 tuples in some bin.

    """

    order: int
    e: float
    b: float
    grid: tuple[np.ndarray, ...]
    values: np.ndarray
    stderr: np.ndarray
    low_statistics: bool
    n_samples: int

    @property
    def centers(self) -> tuple[np.ndarray, ...]:
        return tuple(0.5 * (edge[1:] + edge[:-1]) for edge in self.grid)

    def separation_profile(self) -> tuple[np.ndarray, np.ndarray]:
        """Average over the anchor axis.

        Returns:
            (tuple[np.ndarray, np.ndarray]): `(values, stderr)` over the separation axes.

        """
        if self.order == 1:
            return self.values, self.stderr

        k = self.values.shape[0]
        values = self.values.mean(axis=0)
        stderr = np.sqrt(np.sum(self.stderr**2, axis=0)) / k

        return values, stderr

    def to_frame(self) -> pd.DataFrame:
        """Long format: one row per bin with `alpha_1 .. alpha_n, value, stderr`."""
        mesh = np.meshgrid(*self.centers, indexing="ij")
        data = {f"alpha_{k + 1}": m.reshape(-1) for k, m in enumerate(mesh)}
        data["value"] = self.values.reshape(-1)
        data["stderr"] = self.stderr.reshape(-1)

        return pd.DataFrame(data)
