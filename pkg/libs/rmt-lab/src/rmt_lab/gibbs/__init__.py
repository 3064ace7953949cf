from __future__ import annotations

from .classes import *
from .constants import *
from .convexity import *
from .hamiltonian import *

