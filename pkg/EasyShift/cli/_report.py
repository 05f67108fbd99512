# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Machine-readable reports, their schema and the CSV aggregation."""

import json
import platform
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import pandas as pd
import scipy

# utilities
from ..utilities import Display, Folder, Dumps, Save_json, Load_json
from ..__about__ import __version__

SCHEMA_VERSION = "1.0"
SCHEMA_FILE = Folder.Join(Folder.Dir(__file__), "report_schema.json")
REPORT_EXTENSION = ".report.json"
CSV_COLUMNS = ["name", "criterion", "shadowing", "max_residual", "K", "runtime"]
"""one row per report"""

def Versions() -> dict:
    return {"easyshift": __version__, "numpy": np.__version__, "scipy": scipy.__version__,
            "pandas": pd.__version__, "python": platform.python_version()}

@dataclass
class Report:
    """Result of one analysis. Every number is reproducible from the echoed config."""

    config: dict
    """effective run configuration"""
    scenario: dict
    classification: Optional[dict] = None
    conjugacy: Optional[dict] = None
    shadowing: Optional[dict] = None
    residuals: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    hyperbolicity: list = field(default_factory=list)
    """one note per factor"""
    disclosures: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    exitCode: int = 0
    wallClock: float = 0.0
    versions: dict = field(default_factory=Versions)

    @property
    def name(self) -> str:
        return self.scenario.get("name", "")

    @property
    def criterion(self) -> Optional[str]:
        return None if self.classification is None else self.classification["criterion"]

    @property
    def shadowingVerdict(self) -> Optional[bool]:
        return None if self.shadowing is None else self.shadowing["verdict"]

    @property
    def maxResidual(self) -> float:
        values = [float(v) for v in self.residuals.values() if isinstance(v, (int, float))]
        return max(values) if len(values) > 0 else np.nan

    @property
    def K(self) -> float:
        if self.shadowing is None:
            return np.nan
        return _As_float(self.shadowing.get("K", np.nan))

    def To_dict(self, withClock=True) -> dict:
        dct = {
            "schema_version": SCHEMA_VERSION,
            "kind": "report",
            "config": self.config,
            "scenario": self.scenario,
            "classification": self.classification,
            "conjugacy": self.conjugacy,
            "shadowing": self.shadowing,
            "residuals": self.residuals,
            "checks": self.checks,
            "hyperbolicity": self.hyperbolicity,
            "disclosures": self.disclosures,
            "errors": self.errors,
            "exit_code": self.exitCode,
            "versions": self.versions,
        }
        if withClock:
            dct["wall_clock"] = self.wallClock
        return dct

    def Dumps(self, withClock=True) -> str:
        """JSON text, identical for identical configs when withClock is False"""
        return Dumps(self.To_dict(withClock))

    def Row(self) -> dict:
        return {"name": self.name, "criterion": self.criterion, "shadowing": self.shadowingVerdict,
                "max_residual": self.maxResidual, "K": self.K, "runtime": self.wallClock}

    def Summary(self, verbosity=True) -> str:
        items = {"scenario": self.name,
                 "criterion": self.criterion,
                 "certification": None if self.classification is None else self.classification["certification"],
                 "shadowing": self.shadowingVerdict,
                 "K": self.K,
                 "max residual": self.maxResidual,
                 "hyperbolicity": ", ".join(self.hyperbolicity) if len(self.hyperbolicity) > 0 else None,
                 "exit code": self.exitCode,
                 "wall clock (s)": self.wallClock}
        text = Display.Print_summary(f"EasyShift: {self.name}", items, verbosity)
        if verbosity:
            [Display.MyPrintWarning(f"{key}: {value}") for key, value in self.disclosures.items() if isinstance(value, str)]
            [Display.MyPrintError(error) for error in self.errors]
        return text

    def Save(self, folder: str, verbosity=True) -> str:
        return Save_json(self.To_dict(), folder, f"{self.name}{REPORT_EXTENSION}", verbosity)

    @staticmethod
    def From_dict(dct: dict) -> "Report":
        """Reads a report written by To_dict.

        Raises
        ------
        ValueError
            when dct is not a report
        """

        if not isinstance(dct, dict) or dct.get("kind") != "report":
            raise ValueError("not an EasyShift report")
        try:
            return Report(dct["config"], dct["scenario"], dct["classification"], dct["conjugacy"],
                          dct["shadowing"], dct["residuals"], dct["checks"], dct["hyperbolicity"],
                          dct["disclosures"], dct["errors"], dct["exit_code"], dct.get("wall_clock", np.nan),
                          dct["versions"])
        except KeyError as error:
            raise ValueError(f"missing report field {error}")

def _As_float(value) -> float:
    if isinstance(value, str):
        return float(value)
    return np.nan if value is None else float(value)

# ----------------------------------------------
# Schema
# ----------------------------------------------

def Load_schema() -> dict:
    with open(SCHEMA_FILE, "r") as f:
        return json.load(f)

def Validate_report(dct: dict) -> None:
    """Raises jsonschema.ValidationError when dct does not follow the report schema."""
    import jsonschema
    jsonschema.validate(dct, Load_schema())

# ----------------------------------------------
# Aggregation
# ----------------------------------------------

def Aggregate_reports(folder: str, verbosity=True) -> tuple[pd.DataFrame, list[str]]:
    """One row per readable report of folder.

    Returns
    -------
    tuple[pd.DataFrame, list[str]]
        rows (columns CSV_COLUMNS), unreadable files
    """

    files = Folder.List_files(folder, REPORT_EXTENSION)
    rows = []
    skipped = []

    for file in files:
        try:
            report = Report.From_dict(Load_json(file, False))
            rows.append(report.Row())
        except (OSError, ValueError, TypeError) as error:
            # json.JSONDecodeError is a ValueError
            skipped.append(file)
            if verbosity:
                Display.MyPrintWarning(f"skipped {Folder.Short_name(file)}: {error}")

    if len(files) == 0 and verbosity:
        Display.MyPrintWarning(f"no report in {Folder.Short_name(folder)}")

    df = pd.DataFrame(rows, columns=CSV_COLUMNS)

    return df, skipped

def Save_csv(df: pd.DataFrame, file: str, verbosity=True) -> str:
    file = Folder.Join(file, mkdir=True)
    df.to_csv(file, index=False)
    if verbosity:
        Display.MyPrint(f'Saved:\n{Folder.Short_name(file)}\n', 'green')
    return file
