# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the batch commands (also available with `python -m EasyShift`)."""

from .cli import (RunConfig, Merge_config, Report, Validate_report, Aggregate_reports,
                  Exit_code, Analyze, Certify, Read_points, Write_points,
                  Cmd_analyze, Cmd_shadow, Cmd_report, Cmd_list, main)
