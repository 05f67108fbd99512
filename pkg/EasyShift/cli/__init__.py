# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from ._config import RunConfig, Parse_window, Inline_scenario, Load_config, Merge_config
from ._report import (Report, Versions, Load_schema, Validate_report,
                      Aggregate_reports, Save_csv, REPORT_EXTENSION, CSV_COLUMNS)
from ._commands import (EXIT_OK, EXIT_ERROR, EXIT_CONFIG, EXIT_REFUSAL, EXIT_VERIFICATION, EXIT_IO,
                        Exit_code, Analyze, Certify, Read_points, Write_points,
                        Cmd_analyze, Cmd_shadow, Cmd_report, Cmd_list, main)
