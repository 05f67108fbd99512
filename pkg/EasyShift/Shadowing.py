# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the growth ladders, the shadowing certificates and the shadowing solvers."""

# ----------------------------------------------
# Ladders
# ----------------------------------------------

from .shadow import (Trend, GrowthLadder, ConditionResult, HyperbolicityType,
                     Growth_ladders, Evaluate_conditions,
                     Geometric_means, Hyperbolicity_verdict, Matrix_is_hyperbolic)

# ----------------------------------------------
# Certificates
# ----------------------------------------------

from .shadow import (SeedVerdict, ShadowingCertificate,
                     Factor_series_bound, Equi_shadowing_bound,
                     Shadowing_verdict, Require_shadowing, Factor_property_check)

# ----------------------------------------------
# Solvers
# ----------------------------------------------

from .shadow import (Defects_from_pseudo_orbit, Perturbed_orbit, Defect_suite,
                     Diagonal_range, Solve_factor, Orbit_residual,
                     Solve_shadowing, Shadow_pseudo_orbit, Realized_K,
                     Decay_length, Window_oracle, Oracle_agreement)
