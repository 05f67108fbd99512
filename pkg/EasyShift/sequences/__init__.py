# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from ._frame import Frame
from ._opseq import (OperatorSequence, PRODUCT_CACHE_SPAN,
                     Constant_sequence, Periodic_sequence, Listed_sequence,
                     Partial_product, Weight, Frame_vector,
                     Check_intertwining, Uniform_bound_check, Telescoping_residual)
