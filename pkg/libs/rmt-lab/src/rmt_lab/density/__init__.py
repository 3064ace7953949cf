from __future__ import annotations

from .classes import *
from .constants import *
from .laws import *
from .modulus import *
from .stieltjes import *

