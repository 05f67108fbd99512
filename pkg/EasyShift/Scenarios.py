# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the built-in scenarios, their cones and their closed forms."""

# ----------------------------------------------
# Cones
# ----------------------------------------------

from .scenarios import CONE_HALF_ANGLE, Cone2D, Rotation_matrix, Cone_invariant, Cone_expansion, Frames_in_cones

# ----------------------------------------------
# Scenarios
# ----------------------------------------------

from .scenarios import (Expected, Scenario, WINDOW, GOLDEN_CONJUGATE, Limit_direction,
                        Build_rotation, Build_diagonal, Build_diagonal_split,
                        Build_eigen_orthogonal, Build_jointly_diagonalizable,
                        Build_anosov, Find_return_times, Build_elliptic_hyperbolic,
                        Build_jordan_skew, Jordan_weight, Jordan_iterate,
                        Jordan_iterate_residual, Jordan_skew_residual,
                        Build_no_cones, Delta_gram, Gram_projection_norms, Build_delta_basis,
                        CATALOG, Builtin_names, Get_scenario, Catalog_document)
