from __future__ import annotations

from .checkpoint import *
from .constants import *
from .load import *
from .save import *

