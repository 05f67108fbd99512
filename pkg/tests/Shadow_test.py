# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest

from EasyShift import np, Scenarios
# linalg
from EasyShift.Linalg import RefusalError, DivergenceError
# spaces
from EasyShift.Spaces import WeightSeq, SeqPoint, Impulse, Seq_norm, Shift_apply
# classification
from EasyShift.Classification import Classify
# shadowing
from EasyShift.Shadowing import (Trend, GrowthLadder, HyperbolicityType,
                                 Growth_ladders, Evaluate_conditions, Geometric_means,
                                 Hyperbolicity_verdict, Matrix_is_hyperbolic,
                                 Factor_series_bound, Equi_shadowing_bound, Shadowing_verdict, Require_shadowing,
                                 Factor_property_check, Defects_from_pseudo_orbit, Perturbed_orbit,
                                 Defect_suite, Diagonal_range, Orbit_residual, Solve_shadowing,
                                 Shadow_pseudo_orbit, Realized_K, Decay_length,
                                 Window_oracle, Oracle_agreement)

WINDOW = (-30, 30)
N_MAX = 16
K_MAX = 64
SHADOWING_SCENARIOS = ["rotation", "diagonal", "eigen_orthogonal", "jointly_diagonalizable", "anosov", "elliptic_bounded"]

def Certificate(scenario: Scenarios.Scenario):
    verdict = Classify(scenario.S, scenario.bases, WINDOW)
    return Shadowing_verdict(scenario.S, nMax=N_MAX, kMax=K_MAX, verdict=verdict)

@pytest.fixture
def rotation_certificate():
    return Certificate(Scenarios.Build_rotation())

@pytest.fixture
def split_certificate():
    return Certificate(Scenarios.Build_diagonal_split())

class TestLadders:

    def test_halved_rotation(self):

        scenario = Scenarios.Build_rotation()

        ladder = Growth_ladders(scenario.S, [1.0, 0.0], N_MAX, K_MAX)

        # every weight is 1/2
        assert np.allclose(ladder.A, 0.5, rtol=1e-12)
        n = ladder.n
        assert np.allclose(ladder.cFuture, 2**(-(n+1)/n), rtol=1e-12)
        assert ladder.Trend("A") == Trend.flat

        conditions = Evaluate_conditions(ladder)
        assert conditions.fired == "A"
        assert conditions.split is None

    def test_alternating_weights(self):

        scenario = Scenarios.Build_no_cones()

        ladder = Growth_ladders(scenario.S, [1.0, 0.0], N_MAX, K_MAX)

        # products of n consecutive weights are 1 or 2^(+-1)
        n = ladder.n
        assert np.allclose(ladder.A, 2**(1/n), rtol=1e-9)
        assert np.allclose(ladder.B, 2**(-1/n), rtol=1e-9)
        assert np.all(np.abs(np.log(ladder.A)) <= np.log(2)/n + 1e-12)

        conditions = Evaluate_conditions(ladder)
        assert conditions.fired is None

    def test_split(self):

        scenario = Scenarios.Build_diagonal_split()

        ladder = Growth_ladders(scenario.S, [1.0], N_MAX, K_MAX)

        n = ladder.n
        assert np.allclose(ladder.cPast, 2**(-(n+1)/n), rtol=1e-12)
        assert np.allclose(ladder.cFuture, 2**((n+1)/n), rtol=1e-12)
        assert ladder.Limit("A") > 1 and ladder.Limit("B") < 1

        conditions = Evaluate_conditions(ladder)
        assert conditions.fired == "C"
        assert conditions.split == {"contracting": "past", "expanding": "future"}

    def test_inconclusive(self):

        values = np.full((3, 2), 0.9995)
        ladder = GrowthLadder(2, 2, values, values, np.full(2, 0.5), np.full(2, 1.0))

        conditions = Evaluate_conditions(ladder)

        assert conditions.fired is None
        assert conditions.inconclusive["A"] and conditions.inconclusive["B"]
        assert conditions.inconclusive["C"]
        assert not conditions.holds["A"]

        with pytest.raises(KeyError):
            ladder.Limit("D")

    def test_to_dict(self):

        scenario = Scenarios.Build_rotation()
        dct = Growth_ladders(scenario.S, [0.0, 1.0], 4, 8).To_dict()

        assert set(dct.keys()) == {"A", "B", "C_past", "C_future"}
        assert len(dct["A"]["values"]) == 4
        assert dct["A"]["trend"] == "flat"

class TestHyperbolicity:

    def test_verdicts(self):

        assert Hyperbolicity_verdict(WeightSeq.Constant(0.5), N_MAX, K_MAX) == HyperbolicityType.contracting
        assert Hyperbolicity_verdict(WeightSeq.Constant(2.0), N_MAX, K_MAX) == HyperbolicityType.expanding
        assert Hyperbolicity_verdict(WeightSeq.Periodic([2.0, 0.5]), N_MAX, K_MAX) == HyperbolicityType.not_hyperbolic

        sups, infs = Geometric_means(WeightSeq.Periodic([2.0, 0.5]), 4, 8)
        assert np.allclose(sups, [2.0, 1.0, 2**(1/3), 1.0])
        assert np.allclose(infs, [0.5, 1.0, 2**(-1/3), 1.0])

    def test_matrices(self):

        assert Matrix_is_hyperbolic(np.diag([2.0, 0.5]))
        assert not Matrix_is_hyperbolic(Scenarios.Rotation_matrix(1.0))
        assert not Matrix_is_hyperbolic(np.array([[1.0, 1.0], [0.0, 1.0]]))

class TestSeries:

    def test_bounds(self):

        assert Factor_series_bound(WeightSeq.Constant(0.5), "A", K_MAX) == pytest.approx(2.0, rel=1e-12)
        assert Factor_series_bound(WeightSeq.Constant(2.0), "B", K_MAX) == pytest.approx(1.0, rel=1e-12)

        split = WeightSeq(lambda n: 0.5 if n <= 0 else 2.0, C=2.1)
        assert Factor_series_bound(split, "C", K_MAX) == pytest.approx(3.0, rel=1e-12)

    def test_geometric_tail(self):

        # the window is too short to reach negligible terms
        rate = 0.9
        bound = Factor_series_bound(WeightSeq.Constant(rate), "A", 8)
        assert bound == pytest.approx(1/(1 - rate), rel=1e-9)

    def test_divergence(self):

        with pytest.raises(DivergenceError):
            Factor_series_bound(WeightSeq.Constant(1.0, C=1.5), "A", K_MAX)

        with pytest.raises(ValueError):
            Factor_series_bound(WeightSeq.Constant(0.5), "D", K_MAX)

    def test_equi_bound(self):

        factors = [WeightSeq.Constant(0.5), WeightSeq.Constant(2.0)]

        assert Equi_shadowing_bound(factors, [2.0, 1.0]) == 2.0

        with pytest.raises(AssertionError):
            Equi_shadowing_bound(factors, [2.0])

class TestCertificate:

    def test_rotation(self, rotation_certificate):

        certificate = rotation_certificate

        assert certificate.verdict and certificate.generalizedHyperbolic
        assert [seed.fired for seed in certificate.perSeed] == ["A", "A"]
        # K = sum_b K_b |Gamma_b| = 2 + 2
        assert certificate.K == pytest.approx(4.0, rel=1e-9)
        assert certificate.equiK == pytest.approx(2.0, rel=1e-9)
        assert Factor_property_check(certificate)

        dct = certificate.To_dict()
        assert dct["verdict"] and len(dct["per_seed"]) == 2

    def test_split(self, split_certificate):

        assert split_certificate.verdict
        assert split_certificate.perSeed[0].fired == "C"
        assert split_certificate.K == pytest.approx(3.0, rel=1e-9)

    def test_no_cones(self):

        certificate = Certificate(Scenarios.Build_no_cones())

        assert not certificate.verdict
        assert np.isinf(certificate.K) and np.isinf(certificate.equiK)
        assert Factor_property_check(certificate)
        # every S_n is hyperbolic
        assert Matrix_is_hyperbolic(certificate.S.Get(0)) and Matrix_is_hyperbolic(certificate.S.Get(1))

        with pytest.raises(RefusalError):
            Require_shadowing(certificate)

        with pytest.raises(RefusalError):
            Solve_shadowing(certificate, [Impulse(0, [1.0, 0.0])])

    def test_refusal(self):

        scenario = Scenarios.Build_jordan_skew()

        with pytest.raises(RefusalError):
            Shadowing_verdict(scenario.S, np.eye(2), N_MAX, K_MAX)

class TestSolver:

    def test_defect_suite(self):

        suite = Defect_suite(2, 4, (-3, 3), nInstances=9)

        assert len(suite) == 9
        assert all(len(defects) == 4 for defects in suite)
        assert all(z.window == (-3, 3) and z.dim == 2 for defects in suite for z in defects)
        assert Diagonal_range(suite[0]) == (-2, 7)

    def test_impulse(self, rotation_certificate):

        certificate = rotation_certificate
        S = certificate.S
        z = Impulse(2, [1.0, 0.0])
        defects = [z, 0.0*z, 0.0*z]

        orbit, realized = Solve_shadowing(certificate, defects)

        assert Orbit_residual(S, orbit, defects) < 1e-12
        assert Seq_norm(orbit[0]) < 1e-14
        assert Seq_norm(orbit[1] - z) < 1e-12
        # |sigma_S| = 1/2
        assert Seq_norm(orbit[3]) == pytest.approx(0.25, rel=1e-9)
        assert realized == pytest.approx(1.0, rel=1e-9)

    @pytest.mark.parametrize("certificate", ["rotation_certificate", "split_certificate"])
    def test_realized_K(self, certificate, request):

        certificate = request.getfixturevalue(certificate)
        suite = Defect_suite(certificate.S.dim, 6, (-8, 8), nInstances=12)

        realizedK = Realized_K(certificate, suite)

        assert certificate.realizedK == realizedK
        assert 0 < realizedK <= 1.05 * certificate.K

        for defects in suite[:3]:
            orbit, realized = Solve_shadowing(certificate, defects)
            assert Orbit_residual(certificate.S, orbit, defects) < 1e-10
            assert realized <= certificate.K

    @pytest.mark.parametrize("name", SHADOWING_SCENARIOS)
    def test_defect_suite_on_scenarios(self, name: str):

        scenario = Scenarios.Get_scenario(name)
        assert scenario.expected.shadowing

        certificate = Certificate(scenario)
        S = certificate.S
        suite = Defect_suite(S.dim, 6, (-8, 8), nInstances=200, seed=0xC0FFEE)

        ratios = []
        for defects in suite:
            orbit, realized = Solve_shadowing(certificate, defects)
            supZ = max(Seq_norm(z, S.norm) for z in defects)
            supX = max(Seq_norm(x, S.norm) for x in orbit)
            assert Orbit_residual(S, orbit, defects) <= 1e-10
            assert supX <= certificate.K * supZ * (1 + 1e-9)
            ratios.append(realized)

        assert max(ratios) <= certificate.K
        assert Realized_K(certificate, suite[:20]) == pytest.approx(1.05 * max(ratios[:20]), rel=1e-12)

        # impulses, noise and sign patterns
        for defects in suite[::20]:
            orbit, _ = Solve_shadowing(certificate, defects)
            assert Oracle_agreement(orbit, Window_oracle(certificate, defects)) <= 1e-8

    @pytest.mark.parametrize("certificate", ["rotation_certificate", "split_certificate"])
    def test_oracle(self, certificate, request):

        certificate = request.getfixturevalue(certificate)
        suite = Defect_suite(certificate.S.dim, 8, (-6, 6), nInstances=3)

        assert np.isfinite(Decay_length(certificate))

        for defects in suite:
            orbit, _ = Solve_shadowing(certificate, defects)
            oracle = Window_oracle(certificate, defects)
            assert len(oracle) == len(orbit)
            assert Oracle_agreement(orbit, oracle) < 1e-8

    def test_pseudo_orbit(self, rotation_certificate):

        certificate = rotation_certificate
        S = certificate.S
        x0 = SeqPoint(-2, [[1.0, 0.0], [0.5, -0.5], [0.0, 1.0]])

        pseudoOrbit = Perturbed_orbit(S, x0, 6, 1e-3)
        defects = Defects_from_pseudo_orbit(S, pseudoOrbit)
        trueOrbit, realized = Shadow_pseudo_orbit(certificate, pseudoOrbit)

        for t in range(len(trueOrbit) - 1):
            assert Seq_norm(trueOrbit[t+1] - Shift_apply(S, trueOrbit[t])) < 1e-10

        supDefect = max(Seq_norm(z) for z in defects)
        gap = max(Seq_norm(p - y) for p, y in zip(pseudoOrbit, trueOrbit))
        assert gap <= certificate.K * supDefect * (1 + 1e-9)
        assert realized <= certificate.K
