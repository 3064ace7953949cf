from __future__ import annotations

from .classes import EntropyCurve, GridDensity

import pandas as pd

__all__ = ["grid_frame", "curve_frame"]


def grid_frame(density: GridDensity) -> pd.DataFrame:
    return pd.DataFrame({"x": density.grid, "value": density.values})


def curve_frame(curve: EntropyCurve) -> pd.DataFrame:
    return curve.to_frame()
