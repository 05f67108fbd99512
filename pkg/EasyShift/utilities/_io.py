# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import json

import numpy as np

from . import Folder, Display

# ----------------------------------------------
# Save obj in json file
# ----------------------------------------------

def To_builtin(obj):
    """Converts numpy scalars/arrays (recursively) to json compatible python objects.\n
    Non finite floats are written as the strings "inf", "-inf" and "nan".
    """

    if isinstance(obj, dict):
        return {str(key): To_builtin(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [To_builtin(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return To_builtin(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        if np.isnan(value):
            return "nan"
        if np.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    return obj

def Dumps(obj, indent=2) -> str:
    return json.dumps(To_builtin(obj), indent=indent, allow_nan=False)

def Save_json(obj, folder: str, filename: str, verbosity=True) -> str:
    """Saves the object in folder/filename.json and returns the file path."""

    if not filename.endswith(".json"):
        filename = f"{filename}.json"

    file = Folder.Join(folder, filename, mkdir=True)

    with open(file, "w") as f:
        f.write(Dumps(obj))

    if verbosity:
        Display.MyPrint(f'Saved:\n{Folder.Short_name(file)}\n','green')

    return file

def Load_json(file: str, verbosity=True):
    """Returns the object saved in file."""

    shortName = Folder.Short_name(file)
    if not Folder.Exists(file):
        raise FileNotFoundError(f"{shortName} does not exist")

    with open(file, "r") as f:
        obj = json.load(f)

    if verbosity:
        Display.MyPrint(f'Loaded:\n{shortName}\n','green')

    return obj
