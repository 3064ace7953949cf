from __future__ import annotations

from ._enums import *

