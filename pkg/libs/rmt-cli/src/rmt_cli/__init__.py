from __future__ import annotations

from . import config, experiments
from .classes import *
from .constants import *
from .main import cli, main, run, validate
from .runner import *

__version__ = "0.1.0"
