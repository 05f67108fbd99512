# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import numpy as np

# ----------------------------------------------
# utilities
# ----------------------------------------------
from .utilities import Display, Folder, Tic, Numba_Interface

# ----------------------------------------------
# linear algebra and sequences
# ----------------------------------------------
from . import Linalg, Sequences, Spaces
from .linalg import NormSpec, EUCLIDEAN, MAXNORM
from .sequences import OperatorSequence
from .spaces import SeqPoint, WeightSeq

# ----------------------------------------------
# analyses
# ----------------------------------------------
from . import Classification, Shadowing, Dissipative

# ----------------------------------------------
# scenarios and batch commands
# ----------------------------------------------
from . import Scenarios, Cli

from .__about__ import __version__
