# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module deciding when a shift is conjugate to a product of weighted backward shifts."""

# ----------------------------------------------
# Criteria
# ----------------------------------------------

from .classify import (Criterion, Certification, CriterionResult, ClassificationVerdict,
                       BasisCandidate, As_basis,
                       Is_orthogonal_frame, Gamma_angle_test, Subspace_angle_test,
                       Projection_norms, Projection_bound, Run_tests,
                       Frames_certification, Classify,
                       JointDiagonalization, Joint_diagonalization)

# ----------------------------------------------
# Conjugacy
# ----------------------------------------------

from .classify import FactorMap, ConjugacyBundle, Kp_bound, Kp_bound_printed, Build_factor_map, Build_conjugacy
