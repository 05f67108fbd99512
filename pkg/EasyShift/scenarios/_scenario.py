# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

# utilities
from ..utilities import To_builtin
# linalg
from ..linalg import _utils as _lutils
# sequences
from ..sequences import OperatorSequence
# classify
from ..classify import Criterion, ClassificationVerdict
from ._cones import Cone2D

WINDOW = (-100, 100)
"""default classification window"""

@dataclass
class Expected:
    """Verdicts expected for a built-in scenario."""

    criteria: tuple[Criterion, ...]
    """accepted decisive criteria"""
    shadowing: bool
    hyperbolicity: str
    location: str
    """short description of the setting"""
    conditions: Optional[tuple[str, ...]] = None
    """condition fired by each seed of the certified basis, None when not recorded"""

    def Match_criterion(self, criterion: Criterion) -> bool:
        return Criterion(criterion) in self.criteria

    def Match_conditions(self, fired: list[Optional[str]]) -> bool:
        return self.conditions is None or list(self.conditions) == list(fired)

    def To_dict(self) -> dict:
        return {"criteria": [c.value for c in self.criteria], "shadowing": self.shadowing,
                "hyperbolicity": self.hyperbolicity, "location": self.location,
                "conditions": None if self.conditions is None else list(self.conditions)}

@dataclass
class Scenario:
    """Generator, candidate bases and expected verdicts of a built-in case."""

    name: str
    S: OperatorSequence
    bases: list[np.ndarray]
    """candidate seed bases, (d, d) arrays with the seeds as rows"""
    expected: Optional[Expected]
    """None for user defined sequences"""
    params: dict = field(default_factory=dict)
    cones: dict[str, Cone2D] = field(default_factory=dict)
    window: tuple[int, int] = WINDOW
    nMax: int = _lutils.N_MAX
    kMax: int = _lutils.K_MAX

    @property
    def dim(self) -> int:
        return self.S.dim

    def Matches(self, verdict: ClassificationVerdict, shadowing: Optional[bool]) -> bool:
        """computed criterion and shadowing verdict agree with the expected ones"""
        if self.expected is None:
            return False
        return self.expected.Match_criterion(verdict.criterion) and bool(shadowing) == self.expected.shadowing

    def To_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.S.dim,
            "C": self.S.C,
            "norm": self.S.norm.To_dict(),
            "periodic": self.S.isPeriodic,
            "params": To_builtin(self.params),
            "bases": [np.asarray(E).tolist() for E in self.bases],
            "cones": {key: cone.To_dict() for key, cone in self.cones.items()},
            "window": list(self.window),
            "n_max": self.nMax,
            "k_max": self.kMax,
            "expected": None if self.expected is None else self.expected.To_dict(),
        }
