from __future__ import annotations

from .classes import *
from .constants import *
from .export import *
from .gap_flow import *
from .operators import *
from .ou import *
from .reverse_flow import *

