from __future__ import annotations

from .classes import *
from .constants import *
from .sampling import *
from .spectra import *

