# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from ._system import (ProfileType, MeasureProfile, DiscreteDissipativeSystem, BNormPoint,
                      Gamma_forward, Identity_shift, Verify_composition_conjugacy,
                      Isometry_residual, RN_uniform_check, Rescale_to_lp, Lp_W_norm)
from ._decomposition import DecompositionConjugacy, Dissipative_decomposition_conjugacy
