# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing finitely supported points of l_p(X), weight sequences and the shift operators acting on them."""

from .spaces import SeqPoint, WeightSeq, Zeros, Impulse, Random_point, Seq_norm

# ----------------------------------------------
# Operators
# ----------------------------------------------

from .spaces import (Shift_apply, Shift_apply_inverse, Shift_apply_iterate,
                     WShift_apply, WShift_apply_inverse,
                     Product_shift_apply, Product_norm, Skew_apply)
