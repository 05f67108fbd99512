# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Shadowing certificates of classified shift operators."""

from dataclasses import dataclass, field

import numpy as np

# utilities
from ..utilities import Tic, Display
from ..utilities.Numba_Interface import Window_extrema, Series_partial_sums
# linalg
from ..linalg import RefusalError, DivergenceError, _utils as _lutils
# sequences
from ..sequences import OperatorSequence
# spaces
from ..spaces import WeightSeq
# classify
from ..classify import ClassificationVerdict, ConjugacyBundle, Build_conjugacy
from ._ladders import GrowthLadder, ConditionResult, Growth_ladders, Evaluate_conditions

# ----------------------------------------------
# Series bounds
# ----------------------------------------------

def _Series(logw: np.ndarray, inverse: bool, first: int) -> float:
    """Sums sup over windows of the products of j consecutive weights (or of their inverses) for j >= first.

    Terms beyond the window length are bounded by a geometric tail with the rate at the window length.
    """

    N = logw.size
    if inverse:
        logw = -logw
    maxs, _ = Window_extrema(logw, N)
    logTerms = np.concatenate([[0.0], maxs])[first:]

    total, count = Series_partial_sums(logTerms, _lutils.DIVERGENCE_LIMIT)
    if total > _lutils.DIVERGENCE_LIMIT:
        raise DivergenceError(f"series partial sum {total:.3e} exceeds {_lutils.DIVERGENCE_LIMIT:.0e}")

    if count == logTerms.size:
        rate = np.exp(maxs[-1] / N)
        if rate >= 1:
            raise DivergenceError(f"series rate {rate:.6g} >= 1 at window length {N}")
        total += np.exp(logTerms[-1]) * rate / (1 - rate)

    return float(total)

def Factor_series_bound(w: WeightSeq, condition: str, kMax=_lutils.K_MAX) -> float:
    """Bound on the shadowing constant of B_w for the orbits built by the series solver.

    - A : sum_{j>=0} sup |w_{k+1} ... w_{k+j}|
    - B : sum_{j>=1} sup 1/|w_{k+1} ... w_{k+j}|
    - C : the A sum over the past indexes plus the B sum over the future indexes
    """

    if condition == "A":
        return _Series(w.Log_values(-kMax, kMax), False, 0)
    elif condition == "B":
        return _Series(w.Log_values(-kMax, kMax), True, 1)
    elif condition == "C":
        past = _Series(w.Log_values(-kMax, 0), False, 0)
        future = _Series(w.Log_values(1, kMax), True, 1)
        return past + future
    else:
        raise ValueError(f"unknown condition {condition}")

def Equi_shadowing_bound(factors: list[WeightSeq], perFactorK: list[float]) -> float:
    """Single K witnessing shadowing for the whole family (sum norm on the product)."""
    assert len(factors) == len(perFactorK) and len(factors) > 0, "one K per factor is required"
    assert all(isinstance(w, WeightSeq) for w in factors), "factors must be WeightSeq"
    return float(max(perFactorK))

# ----------------------------------------------
# Certificate
# ----------------------------------------------

@dataclass
class SeedVerdict:
    seed: np.ndarray
    ladder: GrowthLadder
    conditions: ConditionResult
    K: float = np.inf
    """series bound of the factor"""

    @property
    def fired(self) -> str:
        return self.conditions.fired

    def To_dict(self) -> dict:
        return {"seed": self.seed.tolist(), "fired": self.fired,
                "conditions": self.conditions.To_dict(), "K": self.K,
                "ladders": self.ladder.To_dict()}

@dataclass
class ShadowingCertificate:
    """Per-seed conditions and global verdict: shadowing iff a condition fires for every seed."""

    bundle: ConjugacyBundle
    perSeed: list[SeedVerdict]
    nMax: int
    kMax: int
    K: float = np.inf
    """series bound sum_b K_b |Gamma_b|"""
    realizedK: float = np.nan
    """realized sup |x| / sup |z| over the defect suite times the safety factor"""
    notes: list[str] = field(default_factory=list)

    @property
    def S(self) -> OperatorSequence:
        return self.bundle.S

    @property
    def verdict(self) -> bool:
        return all(seed.fired is not None for seed in self.perSeed)

    @property
    def generalizedHyperbolic(self) -> bool:
        """Same flag as verdict: both are read from the same per-seed conditions."""
        return self.verdict

    @property
    def equiK(self) -> float:
        if not self.verdict:
            return np.inf
        return Equi_shadowing_bound(self.bundle.weights, [seed.K for seed in self.perSeed])

    def To_dict(self) -> dict:
        return {"per_seed": [seed.To_dict() for seed in self.perSeed],
                "verdict": self.verdict,
                "generalized_hyperbolic": self.generalizedHyperbolic,
                "K": self.K, "realized_K": self.realizedK, "equi_K": self.equiK,
                "window": {"n_max": self.nMax, "k_max": self.kMax},
                "notes": list(self.notes)}

def Shadowing_verdict(S: OperatorSequence, E=None, nMax=_lutils.N_MAX, kMax=_lutils.K_MAX,
                      verdict: ClassificationVerdict=None, bundle: ConjugacyBundle=None,
                      verbosity=False) -> ShadowingCertificate:
    """Evaluates the conditions (A), (B), (C) for every seed of a certified basis.

    Raises
    ------
    RefusalError
        without a classification certificate
    """

    if bundle is None:
        bundle = Build_conjugacy(S, E, verdict)
    elif bundle.S is not S:
        raise ValueError("the conjugacy belongs to another sequence")

    tic = Tic()

    perSeed = []
    notes = []
    for i, factor in enumerate(bundle.factors):
        seed = factor.seed
        ladder = Growth_ladders(S, seed, nMax, kMax)
        conditions = Evaluate_conditions(ladder)
        K = np.inf
        if conditions.fired is not None:
            try:
                K = Factor_series_bound(factor.weights, conditions.fired, kMax)
            except DivergenceError as error:
                notes.append(f"b{i+1}: {error}")
        if any(conditions.inconclusive.values()) and conditions.fired is None:
            notes.append(f"b{i+1}: inconclusive at n_max = {nMax}")
        perSeed.append(SeedVerdict(seed.copy(), ladder, conditions, K))

    certificate = ShadowingCertificate(bundle, perSeed, nMax, kMax, notes=notes)
    if certificate.verdict:
        certificate.K = float(sum(seed.K * C for seed, C in zip(perSeed, bundle.factorBounds)))

    tic.Tac("Ladders", "Shadowing_verdict", verbosity)

    if verbosity:
        fired = ", ".join(str(seed.fired) for seed in perSeed)
        color = "green" if certificate.verdict else "yellow"
        Display.MyPrint(f"{S.name}: shadowing = {certificate.verdict} ({fired})", color)
        [Display.MyPrintWarning(note) for note in notes]

    return certificate

def Require_shadowing(certificate: ShadowingCertificate) -> None:
    if not certificate.verdict:
        raise RefusalError(f"{certificate.S.name}: the shadowing certificate is false")

def Factor_property_check(certificate: ShadowingCertificate) -> bool:
    """True when the product verdict is false as soon as one factor fails shadowing."""
    anyFailed = any(seed.fired is None for seed in certificate.perSeed)
    return not (anyFailed and certificate.verdict)
