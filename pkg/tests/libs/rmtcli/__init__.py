from __future__ import annotations

from .fixtures import *
from .test_cli import *
from .test_config import *
from .test_experiments import *
