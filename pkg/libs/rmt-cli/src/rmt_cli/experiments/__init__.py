from __future__ import annotations

from .classes import *
from .registry import *

