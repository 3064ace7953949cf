from __future__ import annotations

from .rng import *

