# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Run configuration: JSON document merged with the command-line flags."""

import json
from dataclasses import dataclass, field, fields
from typing import Optional, Union

import numpy as np

# utilities
from ..utilities import Folder, Load_json, To_builtin
# linalg
from ..linalg import ConfigError, SingularMatrixError, NormSpec, Parse_p, _utils as _lutils
# sequences
from ..sequences import Periodic_sequence
# scenarios
from ..scenarios import Scenario, Get_scenario, Builtin_names

FORMATS = ("json", "csv", "text")
TOL = 1e-10
"""default residual tolerance"""
SUITE_INSTANCES = 200
SUITE_STEPS = 6
"""number of defects T of each suite instance"""
SUITE_HALF_WINDOW = 8
"""suite defects are supported on [-8, 8]"""

@dataclass
class RunConfig:
    """Effective parameters of one run. None means the scenario default."""

    scenario: Union[str, dict] = None
    """built-in name, {"builtin": name, "params": {...}} or an inline periodic sequence"""
    window: Optional[tuple[int, int]] = None
    n_max: Optional[int] = None
    k_max: Optional[int] = None
    p: float = 2.0
    tol: float = TOL
    seed: int = _lutils.PROBE_SEED
    n_probes: int = _lutils.N_PROBES
    suite_instances: int = SUITE_INSTANCES
    suite_steps: int = SUITE_STEPS
    suite_half_window: int = SUITE_HALF_WINDOW
    output: str = Folder.RESULTS_DIR
    format: str = "json"
    params: dict = field(default_factory=dict)
    """keyword parameters of the built-in builder"""

    def __post_init__(self):
        self.Validate()

    def Validate(self) -> None:
        """Raises ConfigError for a malformed configuration."""

        if self.scenario is None:
            raise ConfigError(f"a scenario is required, built-in scenarios are: {', '.join(Builtin_names())}")
        if not isinstance(self.scenario, (str, dict)):
            raise ConfigError("scenario must be a built-in name or an inline definition")

        if self.window is not None:
            self.window = Parse_window(self.window)
        for name in ["n_max", "k_max", "n_probes", "suite_instances", "suite_steps", "suite_half_window"]:
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ConfigError(f"{name} must be a positive integer (got {value})")
            setattr(self, name, int(value))

        self.p = Parse_p(self.p)

        try:
            self.tol = float(self.tol)
        except (TypeError, ValueError):
            raise ConfigError(f"tol must be a number (got {self.tol})")
        if not self.tol > 0:
            raise ConfigError(f"tol must be > 0 (got {self.tol})")

        self.seed = int(self.seed)

        if self.format not in FORMATS:
            raise ConfigError(f"format must be in {FORMATS} (got {self.format})")
        if not isinstance(self.params, dict):
            raise ConfigError("params must be a dictionary")

    @property
    def name(self) -> str:
        """scenario name used for the report files"""
        if isinstance(self.scenario, str):
            return self.scenario
        return str(self.scenario.get("builtin", self.scenario.get("name", "inline")))

    def Build_scenario(self) -> Scenario:
        """Builds the referenced scenario.

        Raises
        ------
        ConfigError
            unknown name, bad parameters or malformed inline definition
        """

        if isinstance(self.scenario, str):
            return Get_scenario(self.scenario, **self.params)

        if "builtin" in self.scenario:
            params = dict(self.params)
            params.update(self.scenario.get("params", {}))
            return Get_scenario(self.scenario["builtin"], **params)

        return Inline_scenario(self.scenario)

    def With_scenario(self, scenario: Union[str, dict]) -> "RunConfig":
        """copy running another scenario"""
        dct = self.To_dict()
        dct["scenario"] = scenario
        return RunConfig(**dct)

    def To_dict(self) -> dict:
        dct = {f.name: getattr(self, f.name) for f in fields(self)}
        if self.window is not None:
            dct["window"] = list(self.window)
        dct["p"] = "inf" if np.isinf(self.p) else self.p
        return To_builtin(dct)

    @staticmethod
    def From_dict(dct: dict) -> "RunConfig":
        known = {f.name for f in fields(RunConfig)}
        unknown = set(dct.keys()) - known
        if len(unknown) > 0:
            raise ConfigError(f"unknown configuration keys {sorted(unknown)}, use {sorted(known)}")
        try:
            return RunConfig(**dct)
        except (TypeError, ValueError) as error:
            raise ConfigError(f"malformed configuration: {error}")

def Parse_window(window) -> tuple[int, int]:
    """Reads a half-width N (window [-N, N]) or a pair [a, b] with a < b."""

    try:
        if np.isscalar(window):
            N = int(window)
            if N != window or N < 1:
                raise ConfigError(f"the window half-width must be a positive integer (got {window})")
            return -N, N
        a, b = (int(v) for v in window)
    except (TypeError, ValueError):
        raise ConfigError(f"window must be N or [a, b] (got {window})")

    if not a < b:
        raise ConfigError(f"window [a, b] needs a < b (got {window})")
    return a, b

def Inline_scenario(dct: dict) -> Scenario:
    """Periodic sequence given in the configuration.

    {"name": str, "matrices": [[...]], "offset": int, "C": float, "norm": {"kind", "p"}, "bases": [[[...]]]}
    """

    try:
        mats = [np.array(mat, dtype=float) for mat in dct["matrices"]]
    except KeyError:
        raise ConfigError("an inline scenario needs 'matrices' (or 'builtin')")
    except (TypeError, ValueError) as error:
        raise ConfigError(f"malformed matrices: {error}")

    if len(mats) == 0 or any(mat.ndim != 2 or mat.shape != mats[0].shape or mat.shape[0] != mat.shape[1] for mat in mats):
        raise ConfigError("matrices must be a non empty list of square matrices of the same size")
    d = mats[0].shape[0]
    if not 1 <= d <= _lutils.DIM_MAX:
        raise ConfigError(f"the dimension must be in [1, {_lutils.DIM_MAX}] (got {d})")

    name = str(dct.get("name", "inline"))
    try:
        norm = NormSpec.From_dict(dct.get("norm", {}))
        S = Periodic_sequence(mats, dct.get("C"), norm, name, int(dct.get("offset", 0)))
    except (AssertionError, ValueError, SingularMatrixError) as error:
        raise ConfigError(f"inline scenario '{name}': {error}")

    bases = dct.get("bases", [np.eye(d).tolist()])
    try:
        bases = [np.array(E, dtype=float).reshape(d, d) for E in bases]
    except ValueError:
        raise ConfigError(f"bases must be lists of {d} vectors of dimension {d}")

    return Scenario(name, S, bases, None, {"inline": To_builtin(dct)})

def Load_config(file: str, verbosity=True) -> dict:
    """Reads a JSON configuration.

    Raises
    ------
    OSError
        the file cannot be read
    ConfigError
        the file is not a JSON object
    """

    try:
        dct = Load_json(file, verbosity)
    except json.JSONDecodeError as error:
        raise ConfigError(f"{Folder.Short_name(file)} is not valid JSON: {error}")
    if not isinstance(dct, dict):
        raise ConfigError(f"{Folder.Short_name(file)} must contain a JSON object")
    return dct

def Merge_config(file: Optional[str], flags: dict, verbosity=True) -> RunConfig:
    """Configuration file overridden by the flags that are not None."""

    dct = {} if file is None else Load_config(file, verbosity)
    dct.update({key: value for key, value in flags.items() if value is not None})
    return RunConfig.From_dict(dct)
