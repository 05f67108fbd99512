# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from ._verdict import Criterion, Certification, CriterionResult, ClassificationVerdict
from ._criteria import (BasisCandidate, As_basis,
                        Is_orthogonal_frame, Gamma_angle_test, Subspace_angle_test,
                        Projection_norms, Projection_bound, Run_tests,
                        Frames_certification, Classify)
from ._diagonalization import JointDiagonalization, Joint_diagonalization
from ._conjugacy import (FactorMap, ConjugacyBundle,
                         Kp_bound, Kp_bound_printed,
                         Build_factor_map, Build_conjugacy)
