# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from ._utils import (NormType, NormSpec, EUCLIDEAN, MAXNORM, Parse_p,
                     EasyShiftError, DimensionError, ZeroVectorError, ConfigError,
                     RefusalError, VerificationError, SingularMatrixError,
                     DegenerateBasisError, UnboundedSequenceError, DivergenceError,
                     Half_window)

from ._linalg import (As_vec, As_mat, Apply, Det, Invert,
                      Vnorm, Operator_norm, Sampled_operator_norm,
                      Cos_angle, Gram_det, Coordinates_in_basis,
                      Projection_operator_norm, Projection_operator_norms)
