# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing functions used to facilitate folder and file creation using (os)."""

import os

def Dir(path="") -> str:
    """Returns the directory of the specified path.\n
    If no path is specified, returns the EasyShift directory path.
    """

    assert isinstance(path, str), "filename must be str"

    if path == "":
        dir = EASYSHIFT_DIR
    else:
        normPath = os.path.normpath(path)
        dir = os.path.dirname(normPath)

    return dir

EASYSHIFT_DIR = Dir(Dir(Dir(__file__)))
RESULTS_DIR = os.path.join(EASYSHIFT_DIR, "results")
"""EASYSHIFT_DIR/results"""

def Join(*args: str, mkdir=False) -> str:
    """Joins two or more pathname components and create (or not) the path."""

    path = os.path.join(*args)

    if not Exists(path) and mkdir:
        if "." in os.path.basename(path):
            dir = Dir(path)
            if dir != "":
                os.makedirs(dir, exist_ok=True)
        else:
            os.makedirs(path)

    return path

def Exists(path: str) -> bool:
    """Test whether a path exists. Returns False for broken symbolic links"""
    return os.path.exists(path)

def List_files(folder: str, extension=".json") -> list[str]:
    """Returns the sorted files of folder ending with extension."""

    if not Exists(folder):
        return []

    files = [Join(folder, f) for f in os.listdir(folder) if f.endswith(extension)]

    return sorted(f for f in files if os.path.isfile(f))

def Short_name(path: str) -> str:
    """Returns the path relative to the EasyShift directory when possible."""
    return path.replace(EASYSHIFT_DIR, "")
