from __future__ import annotations

from .__loguru import *

