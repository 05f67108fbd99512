# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the generating sequences, their partial products, frames and weights."""

from .sequences import (OperatorSequence, Frame,
                        Constant_sequence, Periodic_sequence, Listed_sequence,
                        Partial_product, Weight, Frame_vector,
                        Check_intertwining, Uniform_bound_check, Telescoping_residual)
