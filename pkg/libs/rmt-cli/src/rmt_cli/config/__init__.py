from __future__ import annotations

from .classes import *
from .constants import *
from .load import *
from .validators import *

