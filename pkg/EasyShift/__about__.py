# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

try:
    from importlib import metadata
    __version__ = metadata.version("EasyShift")
except Exception:
    __version__ = "unknown"
