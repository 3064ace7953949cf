from __future__ import annotations

from .logging import *

