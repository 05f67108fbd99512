# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Factor maps Gamma_b and coordinate map I onto a product of weighted backward shifts."""

import numpy as np

# utilities
from ..utilities import Tic, Display
# linalg
from ..linalg import (RefusalError, VerificationError, DimensionError,
                      _utils as _lutils)
# sequences
from ..sequences import OperatorSequence
# spaces
from ..spaces import (SeqPoint, WeightSeq, Shift_apply, WShift_apply,
                      Seq_norm, Random_point)
from ._criteria import BasisCandidate, As_basis, Classify, Projection_norms
from ._verdict import ClassificationVerdict

# ----------------------------------------------
# K_p
# ----------------------------------------------

def Kp_bound(C: float, d: int, p: float) -> float:
    """Returns K_p = C^p d^(p-1) such that |sum_b a_b e_n(b)|^p <= K_p sum_b |a_b|^p (K_1 = C)."""
    _lutils._Test_Sup0(C)
    assert d >= 1, "d must be >= 1"
    assert 1 <= p < np.inf, "p must be finite and >= 1"
    if p == 1:
        return float(C)
    return float(C**p * d**(p-1))

def Kp_bound_printed(C: float, d: int, p: float) -> float:
    """Returns the looser constant C^p d^(p(p-1))."""
    _lutils._Test_Sup0(C)
    assert d >= 1, "d must be >= 1"
    assert 1 <= p < np.inf, "p must be finite and >= 1"
    return float(C**p * d**(p*(p-1)))

# ----------------------------------------------
# Factor map
# ----------------------------------------------

def _Coordinates(E: BasisCandidate, pt: SeqPoint) -> np.ndarray:
    """Returns the (N, d) coordinates of the fibers of pt in the frames E_n."""
    if pt.dim != E.dim:
        raise DimensionError(f"point of fiber dimension {pt.dim} given, {E.dim} expected")
    frames = E.Frames(pt.a, pt.b)
    return np.linalg.solve(frames, pt.entries[:,:,np.newaxis])[:,:,0]

class FactorMap:
    """Gamma_b((x_n)) = (coefficient of x_n along e_n(b)), a factor of sigma_S onto B_w(b)."""

    def __init__(self, E: BasisCandidate, index: int):
        assert 0 <= index < E.dim, "index out of range"
        self.__E = E
        self.__index = index
        frame = E.Frame(index)
        self.__weights = WeightSeq.From_frame(frame, E.S.C, name=f"w(b{index+1})")

    @property
    def seed(self) -> np.ndarray:
        return self.__E.vectors[self.__index]

    @property
    def weights(self) -> WeightSeq:
        return self.__weights

    def __call__(self, pt: SeqPoint) -> SeqPoint:
        return SeqPoint(pt.a, _Coordinates(self.__E, pt)[:, self.__index], pt.p)

    def Lift(self, t: SeqPoint) -> SeqPoint:
        """Surjectivity witness (t_n) -> (t_n e_n(b))."""
        if t.dim != 1:
            raise DimensionError("a scalar point is required")
        vectors = self.__E.Frame(self.__index).Vectors(t.a, t.b)
        return SeqPoint(t.a, t.entries * vectors, t.p)

def Build_factor_map(S: OperatorSequence, E, b: int) -> FactorMap:
    """Returns Gamma_b for the b-th seed of E."""
    return FactorMap(As_basis(S, E), b)

# ----------------------------------------------
# Conjugacy
# ----------------------------------------------

class ConjugacyBundle:
    """I = (Gamma_b1, ..., Gamma_bd) and its inverse sum_b a_b e_n(b)."""

    def __init__(self, E: BasisCandidate, verdict: ClassificationVerdict):

        self.__E = E
        self.__verdict = verdict
        self.__factors = [FactorMap(E, i) for i in range(E.dim)]

        # covers the probe windows of Verify
        a, b = verdict.window
        norms = Projection_norms(E.S, E, (min(a, -21), max(b, 22)))
        self.__factorBounds = np.max(norms, axis=0)

    @property
    def S(self) -> OperatorSequence:
        return self.__E.S

    @property
    def basis(self) -> BasisCandidate:
        return self.__E

    @property
    def verdict(self) -> ClassificationVerdict:
        return self.__verdict

    @property
    def factors(self) -> list[FactorMap]:
        return list(self.__factors)

    @property
    def weights(self) -> list[WeightSeq]:
        return [factor.weights for factor in self.__factors]

    @property
    def dim(self) -> int:
        return self.__E.dim

    @property
    def projectionBound(self) -> float:
        """C = sup_n,b |Pi_e_n(b)| over the certification window"""
        return float(np.max(self.__factorBounds))

    @property
    def factorBounds(self) -> np.ndarray:
        """sup_n |Pi_e_n(b)| for every seed b"""
        return self.__factorBounds.copy()

    @property
    def normI(self) -> float:
        """|I| <= sum_b |Gamma_b| for the sum norm on the product"""
        return float(np.sum(self.__factorBounds))

    @property
    def normInverse(self) -> float:
        """|I^-1| <= 1 for the sum norm (unit frame vectors)"""
        return 1.0

    def Kp(self, p: float) -> float:
        return Kp_bound(self.projectionBound, self.dim, p)

    def Kp_printed(self, p: float) -> float:
        return Kp_bound_printed(self.projectionBound, self.dim, p)

    def Forward(self, pt: SeqPoint) -> list[SeqPoint]:
        """I(pt) as d scalar points."""
        coords = _Coordinates(self.__E, pt)
        return [SeqPoint(pt.a, coords[:,i], pt.p) for i in range(self.dim)]

    def Inverse(self, coords: list[SeqPoint]) -> SeqPoint:
        """I^-1((t_b)) = (sum_b t_{b,n} e_n(b))."""
        if len(coords) != self.dim:
            raise DimensionError(f"{len(coords)} coordinates for {self.dim} factors")
        a = min(t.a for t in coords)
        b = max(t.b for t in coords)
        frames = self.__E.Frames(a, b)
        alphas = np.concatenate([t.Values(a, b) for t in coords], axis=1)
        return SeqPoint(a, np.einsum("nij,nj->ni", frames, alphas), coords[0].p)

    def Product_norm(self, coords: list[SeqPoint]) -> float:
        return float(sum(Seq_norm(t) for t in coords))

    def Verify(self, nProbes=_lutils.N_PROBES, seed=_lutils.PROBE_SEED) -> dict[str, float]:
        """Evaluates the factor, conjugacy, round-trip and surjectivity residuals on random probes.

        Probes are finitely supported points with a window starting in [-20, 15] and 1 to 7 entries.
        """

        tic = Tic()

        S = self.S
        norm = S.norm
        rng = np.random.default_rng(seed)
        p = 2.0

        residuals = dict(factor=0.0, conjugacy=0.0, roundtrip=0.0, surjectivity=0.0,
                         normI=0.0, normInverse=0.0)

        for _ in range(nProbes):
            a = int(rng.integers(-20, 16))
            length = int(rng.integers(1, 8))
            pt = Random_point(rng, (a, a+length-1), self.dim, p)
            scale = max(1.0, Seq_norm(pt, norm))

            coords = self.Forward(pt)
            shifted = self.Forward(Shift_apply(S, pt))
            gaps = [shifted[i] - WShift_apply(factor.weights, coords[i])
                    for i, factor in enumerate(self.__factors)]
            residuals["factor"] = max(residuals["factor"], max(Seq_norm(g) for g in gaps) / scale)
            residuals["conjugacy"] = max(residuals["conjugacy"], self.Product_norm(gaps) / scale)

            back = self.Inverse(coords)
            residuals["roundtrip"] = max(residuals["roundtrip"], Seq_norm(back - pt, norm) / scale)

            t = Random_point(rng, (a, a+length-1), 1, p)
            for i, factor in enumerate(self.__factors):
                lifted = self.Forward(factor.Lift(t))
                gap = sum(Seq_norm(lifted[j] - (t if j == i else 0.0 * t)) for j in range(self.dim))
                residuals["surjectivity"] = max(residuals["surjectivity"], gap / max(1.0, Seq_norm(t)))

            ptNorm = Seq_norm(pt, norm)
            residuals["normI"] = max(residuals["normI"], self.Product_norm(coords) / ptNorm)
            residuals["normInverse"] = max(residuals["normInverse"], ptNorm / self.Product_norm(coords))

        tic.Tac("Classify", "Conjugacy verification")

        return residuals

    def Assert_verified(self, residuals: dict[str, float], tol=1e-10) -> None:
        """Raises VerificationError when a residual exceeds tol or a norm ratio exceeds its certified bound."""

        for name in ["factor", "conjugacy", "roundtrip", "surjectivity"]:
            if residuals[name] > tol:
                raise VerificationError(f"{name} residual {residuals[name]:.3e} > {tol:.1e}")
        if residuals["normI"] > self.normI * (1 + 1e-9):
            raise VerificationError(f"|I x| / |x| = {residuals['normI']:.6g} exceeds the certified {self.normI:.6g}")
        if residuals["normInverse"] > self.normInverse * (1 + 1e-9):
            raise VerificationError(f"|x| / |I x| = {residuals['normInverse']:.6g} exceeds 1")

    def To_dict(self) -> dict:
        return {"seeds": self.__E.vectors.tolist(),
                "factor_bounds": self.__factorBounds.tolist(),
                "projection_bound": self.projectionBound,
                "norm_I": self.normI,
                "norm_I_inverse": self.normInverse,
                "K_2": self.Kp(2), "K_2_printed": self.Kp_printed(2)}

def _Certifies(verdict: ClassificationVerdict, E: BasisCandidate) -> bool:
    """the verdict was certified for the (normalized) seeds of E"""
    basis = verdict.basis
    return basis is not None and basis.shape == E.vectors.shape and np.allclose(basis, E.vectors, rtol=0, atol=1e-12)

def Build_conjugacy(S: OperatorSequence, E=None, verdict: ClassificationVerdict=None,
                    window: tuple[int, int]=None, verbosity=False) -> ConjugacyBundle:
    """Builds I for a basis with certified bounded projections.

    Parameters
    ----------
    S : OperatorSequence
        generating sequence
    E : optional
        seed basis, by default the basis certified by the verdict
    verdict : ClassificationVerdict, optional
        classification of S, computed on window when not given
    window : tuple[int, int], optional
        certification window, by default (-N_MAX, N_MAX) or the window of the verdict

    A verdict certified for another basis than E is discarded and E is classified again.

    Raises
    ------
    RefusalError
        when no criterion certifies bounded projections of E
    """

    if E is not None:
        E = As_basis(S, E)
        if verdict is not None and not _Certifies(verdict, E):
            window = verdict.window if window is None else window
            verdict = None

    if verdict is None:
        window = (-_lutils.N_MAX, _lutils.N_MAX) if window is None else window
        verdict = Classify(S, [E], window)

    if not verdict.isCertified:
        raise RefusalError(f"{S.name}: no criterion certifies bounded projections, the conjugacy is not built")

    if E is None:
        E = As_basis(S, verdict.basis)
    elif not _Certifies(verdict, E):
        # joint diagonalization certifies an eigenbasis instead of E
        raise RefusalError(f"{S.name}: the certified basis is not the given one, the conjugacy is not built")
    bundle = ConjugacyBundle(E, verdict)

    if verbosity:
        Display.MyPrint(f"{S.name}: conjugacy with {E.dim} factors, C = {bundle.projectionBound:.4g}", "green")

    return bundle
