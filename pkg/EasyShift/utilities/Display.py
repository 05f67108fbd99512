# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing functions used to print verdicts, certificates and warnings in the terminal."""

from enum import Enum

import numpy as np

# ----------------------------------------------
# Print in terminal
# ----------------------------------------------

class __Colors(str, Enum):
    blue = '\033[34m'
    cyan = '\033[36m'
    white = '\033[37m'
    green = '\033[32m'
    black = '\033[30m'
    red = '\033[31m'
    yellow = '\033[33m'
    magenta = '\033[35m'

class __Sytles(str, Enum):
    BOLD = '\033[1m'
    ITALIC = '\033[3m'
    UNDERLINE = '\033[4m'
    RESET = '\33[0m'

def MyPrint(text: str, color='cyan', bold=False, italic=False, underLine=False, end:str=None) -> None:

    dct = dict(map(lambda item: (item.name, item.value), __Colors))

    if color not in dct:
        MyPrint(f"Color must be in {dct.keys()}", 'red')

    else:
        formatedText = ""

        if bold: formatedText += __Sytles.BOLD
        if italic: formatedText += __Sytles.ITALIC
        if underLine: formatedText += __Sytles.UNDERLINE

        formatedText += dct[color] + str(text)

        formatedText += __Sytles.RESET

        print(formatedText, end=end)

def MyPrintError(text: str) -> str:
    return MyPrint(text, 'red')

def MyPrintWarning(text: str) -> str:
    return MyPrint(text, 'yellow')

def Section(text: str, verbosity=True) -> str:
    """Creates a new section in the terminal."""

    lengthText = len(text)

    lengthTot = 45

    edges = "="*int((lengthTot - lengthText)/2)

    section = f"\n\n{edges} {text} {edges}\n"

    if verbosity: MyPrint(section)

    return section

# ----------------------------------------------
# Verdicts
# ----------------------------------------------

def Format_value(value) -> str:
    """Formats a scalar for a one line summary (inf, nan, bool and floats)."""

    if isinstance(value, (bool, np.bool_)):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if not np.isfinite(value):
            return str(float(value))
        return f"{value:.6g}"
    return str(value)

def Print_summary(title: str, items: dict, verbosity=True) -> str:
    """Prints `key : value` lines under a section title.

    Parameters
    ----------
    title : str
        section title
    items : dict
        ordered values to print, nested dictionaries are flattened with a dot
    verbosity : bool, optional
        prints the summary, by default True

    Returns
    -------
    str
        the summary text
    """

    def flatten(dct: dict, prefix=""):
        for key, value in dct.items():
            name = f"{prefix}{key}"
            if isinstance(value, dict):
                yield from flatten(value, f"{name}.")
            else:
                yield name, value

    lines = [f"{name} : {Format_value(value)}" for name, value in flatten(items)]
    text = Section(title, False) + "\n".join(lines)

    if verbosity:
        Section(title)
        [MyPrint(line, 'white') for line in lines]

    return text
