from __future__ import annotations

from .classes import *
from .constants import *
from .correlations import *
from .gaps import *
from .metrics import *
from .observables import *
from .references import *

