from __future__ import annotations

from .classes import *
from .constants import *
from .drift import *
from .export import *
from .integrator import *
from .rigidity import *

