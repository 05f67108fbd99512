# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest

from EasyShift import np, Scenarios
# linalg
from EasyShift.Linalg import ConfigError, ZeroVectorError
# spaces
from EasyShift.Spaces import SeqPoint
# classification
from EasyShift.Classification import Criterion, Classify, Projection_bound
# shadowing
from EasyShift.Shadowing import Shadowing_verdict

WINDOW = (-30, 30)

class TestCatalog:

    def test_names(self):

        names = Scenarios.Builtin_names()

        assert "rotation" in names and "delta_basis" in names
        assert names == list(Scenarios.CATALOG.keys())

        scenario = Scenarios.Get_scenario("rotation", theta=0.25)
        assert scenario.params["theta"] == 0.25
        assert scenario.To_dict()["expected"]["shadowing"]

        document = Scenarios.Catalog_document()
        assert list(document.keys()) == names
        assert document["no_cones"]["shadowing"] is False
        assert document["delta_basis"]["criteria"] == ["subspace-angle"]

    def test_errors(self):

        with pytest.raises(ConfigError):
            Scenarios.Get_scenario("rotaton")
        with pytest.raises(ConfigError):
            Scenarios.Get_scenario("rotation", phase=0.1)
        with pytest.raises(ConfigError):
            Scenarios.Build_rotation(1.5)
        with pytest.raises(ConfigError):
            Scenarios.Build_delta_basis(0.2)
        with pytest.raises(ConfigError):
            Scenarios.Build_anosov(radius=1.0)
        with pytest.raises(ConfigError):
            Scenarios.Build_anosov(eta=0.5)
        with pytest.raises(ConfigError):
            Scenarios.Build_diagonal([1.0, 0.0])

    def test_diagonal(self):

        scenario = Scenarios.Build_diagonal()
        assert scenario.expected.shadowing
        assert np.allclose(scenario.S.Get(7), np.diag([2.0, 0.5]))

        scenario = Scenarios.Build_diagonal([[2.0, 1.0], [0.5, 1.0]])
        assert scenario.S.period == 2
        assert not scenario.expected.shadowing

    @pytest.mark.parametrize("name", ["rotation", "diagonal", "eigen_orthogonal", "jointly_diagonalizable",
                                      "anosov", "elliptic_bounded", "elliptic_unbounded", "no_cones", "delta_basis"])
    def test_expected_verdicts(self, name: str):

        scenario = Scenarios.Get_scenario(name)

        verdict = Classify(scenario.S, scenario.bases, WINDOW)
        certificate = Shadowing_verdict(scenario.S, nMax=16, kMax=64, verdict=verdict)

        assert scenario.Matches(verdict, certificate.verdict), (verdict.criterion, certificate.verdict)

    def test_jordan_verdict(self):

        scenario = Scenarios.Get_scenario("jordan_skew")

        verdict = Classify(scenario.S, scenario.bases, WINDOW)

        assert scenario.Matches(verdict, False)
        assert not scenario.Matches(verdict, True)

class TestCones:

    def test_rotation_matrix(self):

        assert np.allclose(Scenarios.Rotation_matrix(np.pi/2) @ [1.0, 0.0], [0.0, 1.0])

        R = Scenarios.Rotation_matrix(0.3)
        assert np.allclose(R @ R.T, np.eye(2))

    def test_cone(self):

        cone = Scenarios.Cone2D([2.0, 0.0], 0.25)

        assert np.allclose(cone.axis, [1.0, 0.0])
        assert cone.Contains([1.0, 0.1]) and cone.Contains([-1.0, 0.1])
        assert not cone.Contains([1.0, 1.0])
        assert cone.Angle(cone.boundaryRays[0]) == pytest.approx(0.25)

        with pytest.raises(ZeroVectorError):
            Scenarios.Cone2D([0.0, 0.0])
        with pytest.raises(AssertionError):
            Scenarios.Cone2D([1.0, 0.0], 2.0)

    def test_invariance(self):

        phi = (1 + np.sqrt(5)) / 2
        L = np.array([[2.0, 1.0], [1.0, 1.0]])
        cPlus = Scenarios.Cone2D([phi, 1.0])
        cMinus = Scenarios.Cone2D([-1.0, phi])

        assert Scenarios.Cone_invariant(L, cPlus)
        assert Scenarios.Cone_invariant(np.linalg.inv(L), cMinus)
        assert not Scenarios.Cone_invariant(np.linalg.inv(L), cPlus)
        assert not Scenarios.Cone_invariant(Scenarios.Rotation_matrix(1.0), cPlus)

        value, _ = Scenarios.Cone_expansion(L, cPlus)
        assert value > 2

    def test_expansion_at_boundary(self):

        alpha = 0.25
        cone = Scenarios.Cone2D([1.0, 0.0], alpha)

        value, uncertainty = Scenarios.Cone_expansion(np.diag([2.0, 0.5]), cone)

        # the minimum is reached on the boundary rays
        expected = np.sqrt(4*np.cos(alpha)**2 + 0.25*np.sin(alpha)**2)
        assert value == pytest.approx(expected, rel=1e-9)
        assert uncertainty < 1e-9

    def test_anosov_frames(self):

        scenario = Scenarios.Build_anosov()
        S = scenario.S
        vPlus, vMinus = scenario.params["v_plus"], scenario.params["v_minus"]

        assert S.Frame(vPlus).mode == "future"
        assert S.Frame(vMinus).mode == "past"

        assert Scenarios.Frames_in_cones(S, vPlus, scenario.cones["C+"], WINDOW)[0]
        assert Scenarios.Frames_in_cones(S, vMinus, scenario.cones["C-"], WINDOW)[0]

        # S_0 is the identity, every other S_n expands C+ and S_n^-1 expands C-
        wPlus = S.Frame(vPlus).Weights(-20, 20)
        wMinus = S.Frame(vMinus).Weights(-20, 20)
        assert wPlus[20] == pytest.approx(1.0) and wMinus[20] == pytest.approx(1.0)
        assert np.all(np.delete(wPlus, 20) > 2)
        assert np.all(np.delete(wMinus, 20) < 0.5)

    def test_anosov_schedule(self):

        L = np.array([[2.0, 1.0], [1.0, 1.0]])

        scenario = Scenarios.Build_anosov(schedule=lambda n: L)
        assert scenario.params["schedule"] == "custom"
        assert np.array_equal(scenario.S.Get(0), np.eye(2))

        with pytest.raises(ConfigError):
            Scenarios.Build_anosov(schedule=lambda n: Scenarios.Rotation_matrix(1.0))

class TestElliptic:

    def test_return_times(self):

        times = Scenarios.Find_return_times(Scenarios.GOLDEN_CONJUGATE, 3)

        assert len(times) == 3
        assert times == sorted(set(times))
        assert times[0] >= 1

        later = Scenarios.Find_return_times(Scenarios.GOLDEN_CONJUGATE, 1, start=times[0]+1)
        assert later[0] == times[1]

        with pytest.raises(ConfigError):
            Scenarios.Find_return_times(Scenarios.GOLDEN_CONJUGATE, 1, cap=0)

    def test_bounded(self):

        scenario = Scenarios.Get_scenario("elliptic_bounded")
        S = scenario.S
        params = scenario.params

        assert params["M"] == 1 + params["return_times"][0]
        assert "proxy" in params["zeta_caveat"]
        assert np.array_equal(S.Get(0), np.eye(2))
        for n in range(1, 30):
            assert np.array_equal(S.Get(-n), S.Get(n))

        # L R^q1 L R^q1 ...
        q = params["return_times"][0]
        assert np.array_equal(S.Get(1), np.diag([2.0, 0.5]))
        assert np.array_equal(S.Get(2 + q), np.diag([2.0, 0.5]))
        assert not np.array_equal(S.Get(2), np.diag([2.0, 0.5]))

    def test_bounded_shadowing(self):

        scenario = Scenarios.Get_scenario("elliptic_bounded")
        params = scenario.params

        verdict = Classify(scenario.S, scenario.bases, scenario.window)
        certificate = Shadowing_verdict(scenario.S, nMax=64, kMax=512, verdict=verdict)

        assert scenario.Matches(verdict, certificate.verdict)
        assert certificate.verdict and certificate.generalizedHyperbolic

        # v_minus contracts and v_plus expands on both sides of 0
        fired = [seed.fired for seed in certificate.perSeed]
        assert fired == ["A", "B"]
        assert scenario.expected.Match_conditions(fired)
        assert not any(seed.conditions.holds["C"] for seed in certificate.perSeed)
        assert params["printed_condition"] == "C"

        # every n+1 consecutive maps with n = 64 contain at least 13 >= (n+1)/M copies of L
        bound = params["eta"]**(1/params["M"])
        vMinus, vPlus = certificate.perSeed
        assert vPlus.ladder.Limit("C_future") >= bound - 1e-3
        assert vMinus.ladder.supTerms[0, -1] <= 1/bound + 1e-3

    def test_unbounded_shadowing(self):

        scenario = Scenarios.Get_scenario("elliptic_unbounded")

        verdict = Classify(scenario.S, scenario.bases, scenario.window)
        certificate = Shadowing_verdict(scenario.S, nMax=64, kMax=512, verdict=verdict)

        assert verdict.isCertified
        assert not certificate.verdict
        assert [seed.fired for seed in certificate.perSeed] == [None, None]
        assert scenario.Matches(verdict, certificate.verdict)
        assert "printed_condition" not in scenario.params

    def test_custom_schedule(self):

        q = Scenarios.Find_return_times(Scenarios.GOLDEN_CONJUGATE, 1)[0]

        scenario = Scenarios.Build_elliptic_hyperbolic(nSchedule=lambda i: 2, mSchedule=lambda i: q)
        assert scenario.params["schedule"] == "custom"
        assert np.array_equal(scenario.S.Get(2), np.diag([2.0, 0.5]))

        # zero L blocks leave the rotation alone
        scenario = Scenarios.Build_elliptic_hyperbolic(nSchedule=lambda i: 0, mSchedule=lambda i: 1)
        assert not scenario.expected.shadowing
        assert scenario.expected.criteria == (Criterion.orthogonal,)

        scenario = Scenarios.Build_elliptic_hyperbolic(nSchedule=lambda i: 0, mSchedule=lambda i: 0)
        with pytest.raises(ConfigError):
            scenario.S.Get(1)

class TestJordan:

    def test_weights(self):

        S = Scenarios.Build_jordan_skew().S

        n = range(-100, 101)
        weights = S.Frame([0.0, 1.0]).Weights(-100, 100)
        assert np.allclose(weights, [Scenarios.Jordan_weight(1, k) for k in n], rtol=1e-12, atol=0)
        assert np.allclose(S.Frame([1.0, 0.0]).Weights(-100, 100), 1.0, rtol=1e-12, atol=0)
        assert weights[100 + 2] == pytest.approx(1/2) and weights[100 - 1] == pytest.approx(2.0)

    def test_residuals(self):

        S = Scenarios.Build_jordan_skew().S
        pt = SeqPoint(-2, [[1.0, 2.0], [3.0, -1.0], [0.5, 0.5]], p="inf")

        assert Scenarios.Jordan_iterate_residual(S, pt, kMax=200) < 1e-10
        assert Scenarios.Jordan_skew_residual(S, [pt]) < 1e-14

        iterate = Scenarios.Jordan_iterate(pt, 3)
        assert iterate.window == (-5, -3)
        assert np.allclose(iterate.Get(-5), [1.0 + 3*2.0, 2.0])

    def test_projection_growth(self):

        S = Scenarios.Build_jordan_skew().S

        windows = [10, 50, 100]
        bounds = [Projection_bound(S, np.eye(2), (-N, N)) for N in windows]

        assert bounds[0] < bounds[1] < bounds[2]
        for N, bound in zip(windows, bounds):
            assert bound >= N

class TestDeltaBasis:

    @pytest.mark.parametrize("delta", [1e-2, 1e-3, 1e-4])
    def test_numbers(self, delta: float):

        scenario = Scenarios.Build_delta_basis(delta)
        params = scenario.params
        G = Scenarios.Delta_gram(delta)

        assert params["x0_norm_sq"] == pytest.approx(4*delta, rel=0, abs=1e-12)
        assert np.linalg.det(G) == pytest.approx(3*delta*(1 - delta), rel=1e-8)
        assert Scenarios.Gram_projection_norms(G)[2] == pytest.approx(1/(2*np.sqrt(delta*(1 - delta))))

        E = scenario.bases[0]
        assert np.allclose(E @ E.T, G)
        measured = Projection_bound(scenario.S, E, WINDOW)
        predicted = params["predicted_projection_bound"]
        assert measured == pytest.approx(predicted, rel=0.05)
        assert measured == pytest.approx(predicted, rel=1e-8)
        assert predicted >= 1/(2*np.sqrt(delta))
        assert params["printed_bound"] == pytest.approx(1/(4*delta))
        assert params["printed_bound"] > params["predicted_projection_bound"]

    def test_unbounded_projections(self):

        bounds = []
        for delta in [1e-2, 1e-3, 1e-4]:
            scenario = Scenarios.Build_delta_basis(delta)
            bounds.append(Projection_bound(scenario.S, scenario.bases[0], WINDOW))

        assert bounds[0] < bounds[1] < bounds[2]
        # the bound grows like 1/(2 sqrt(delta))
        assert bounds[2] / bounds[0] == pytest.approx(10.0, rel=0.05)
