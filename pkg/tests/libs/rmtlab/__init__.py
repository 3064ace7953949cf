from __future__ import annotations

from .fixtures import *
from .test_density import *
from .test_dynamics import *
from .test_ensembles import *
from .test_gibbs import *
from .test_io import *
from .test_logging import *
from .test_relaxation1d import *
from .test_statistics import *
