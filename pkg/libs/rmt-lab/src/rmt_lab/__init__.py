from __future__ import annotations

from loguru import logger

## Library logging stays silent until an application enables it,
#  i.e. setup_loguru_logging(enable_loggers=["rmt_lab"])
logger.disable("rmt_lab")

from . import (
    density,
    dynamics,
    ensembles,
    enums,
    exceptions,
    gibbs,
    io,
    relaxation1d,
    settings,
    setup,
    statistics,
    utils,
)
from .exceptions import *

__version__: str = "0.1.0"
