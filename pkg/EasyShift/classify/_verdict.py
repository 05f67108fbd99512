# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

# ----------------------------------------------
# Types
# ----------------------------------------------

class Criterion(str, Enum):
    """Classification criteria, from the strongest to the weakest."""

    orthogonal = "orthogonal"
    gamma_angle = "gamma-angle"
    subspace_angle = "subspace-angle"
    explicit_bound = "explicit-projection-bound"
    jointly_diagonalizable = "jointly-diagonalizable"
    none = "none"

    def __str__(self) -> str:
        return self.name

    @staticmethod
    def Ranked() -> list["Criterion"]:
        """frame criteria used for tie-breaking"""
        return [Criterion.orthogonal, Criterion.gamma_angle, Criterion.subspace_angle, Criterion.explicit_bound]

class Certification(str, Enum):
    """How a 'for all n in Z' statement was checked."""

    exact = "exact"
    """periodic generator and periodic frames at both window ends"""
    window = "window-certified"
    """checked on the window only"""

    def __str__(self) -> str:
        return self.value

@dataclass
class CriterionResult:
    """Outcome of one classification test."""

    name: str
    passed: bool
    value: float = np.nan
    """gamma, angle infimum, max cosine or projection bound"""
    bound: float = np.inf
    """projection bound emitted by the test"""
    halfBound: float = np.inf
    """same bound on the half window (growth diagnostic)"""
    note: str = ""

    def To_dict(self) -> dict:
        return {"passed": bool(self.passed), "value": self.value, "bound": self.bound,
                "half_window_bound": self.halfBound, "note": self.note}

@dataclass
class ClassificationVerdict:
    """Decisive criterion, all certificates and the certified basis."""

    criterion: Criterion
    window: tuple[int, int]
    basis: Optional[np.ndarray] = None
    """(d, d) certified seeds (rows)"""
    certificates: dict = field(default_factory=dict)
    certification: Certification = Certification.window
    projectionBound: float = np.inf
    residuals: dict = field(default_factory=dict)
    diagonalization: object = None

    @property
    def isCertified(self) -> bool:
        return self.criterion != Criterion.none

    def To_dict(self) -> dict:
        certificates = {name: (result.To_dict() if isinstance(result, CriterionResult) else result)
                        for name, result in self.certificates.items()}
        return {
            "criterion": self.criterion.value,
            "certificates": certificates,
            "window": list(self.window),
            "certification": self.certification.value,
            "basis": None if self.basis is None else self.basis.tolist(),
            "projection_bound": self.projectionBound,
            "residuals": dict(self.residuals),
        }
