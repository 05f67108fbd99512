# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the discrete dissipative systems and their composition operators."""

from .dissipative import (ProfileType, MeasureProfile, DiscreteDissipativeSystem, BNormPoint,
                          Gamma_forward, Identity_shift, Verify_composition_conjugacy,
                          Isometry_residual, RN_uniform_check, Rescale_to_lp, Lp_W_norm,
                          DecompositionConjugacy, Dissipative_decomposition_conjugacy)
