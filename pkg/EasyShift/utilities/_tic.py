# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Module containing the Tic class used to time frames, ladders, solvers and commands."""

import time

import pandas as pd

CATEGORIES = ("Frame", "Classify", "Ladders", "Solver", "Oracle", "Scenario", "Cli")
"""categories reported first by `Tic.Resume`, in pipeline order"""

_UNITS = ((86400, "d"), (3600, "h"), (60, "m"), (1, "s"), (1e-3, "ms"))

class Tic:
    """Stopwatch whose laps are recorded in a class-wide history.

    tic = Tic()\n
    ...\n
    tic.Tac("Ladders", "Growth_ladders")
    """

    __History: list[tuple[str, str, float]] = []
    """laps (category, text, seconds)"""

    def __init__(self):
        self.__start = time.perf_counter()

    @staticmethod
    def Get_time_unity(seconds: float) -> tuple[float, str]:
        """Returns the duration expressed in its largest unit (d, h, m, s, ms or µs)."""
        for scale, unit in _UNITS:
            if seconds >= scale:
                return seconds / scale, unit
        return seconds * 1e6, "µs"

    def Tac(self, category="", text="", verbosity=False) -> float:
        """Records and returns the time elapsed since the creation or the last `Tac`."""

        now = time.perf_counter()
        lap = now - self.__start
        self.__start = now

        Tic.__History.append((category, text, lap))

        if verbosity:
            value, unit = Tic.Get_time_unity(lap)
            print(f"{text} ({value:.3f} {unit})")

        return lap

    @staticmethod
    def Get_History() -> pd.DataFrame:
        """Returns the laps as a DataFrame with the columns category, text and time."""
        return pd.DataFrame(Tic.__History, columns=["category", "text", "time"])

    @staticmethod
    def Resume(verbosity=True) -> str:
        """Returns (and prints) the total time and the number of laps of each category."""

        df = Tic.Get_History()
        if df.empty:
            return ""

        totals = df.groupby("category", sort=False)["time"].agg(["sum", "count"])
        order = [c for c in CATEGORIES if c in totals.index] + [c for c in totals.index if c not in CATEGORIES]

        lines = []
        for category in order:
            value, unit = Tic.Get_time_unity(totals.at[category, "sum"])
            lines.append(f"{category} : {value:.3f} {unit} ({totals.at[category, 'count']} laps)")

        resume = "\n".join(lines)
        if verbosity:
            print(resume)

        return resume
