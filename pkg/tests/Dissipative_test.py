# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest
from hypothesis import given, settings, strategies as st

from EasyShift import np
# linalg
from EasyShift.Linalg import ConfigError, DimensionError
# spaces
from EasyShift.Spaces import SeqPoint, WeightSeq, Impulse, Random_point, Seq_norm
# dissipative
from EasyShift.Dissipative import (ProfileType, MeasureProfile, DiscreteDissipativeSystem, BNormPoint,
                                   Gamma_forward, Identity_shift, Verify_composition_conjugacy,
                                   Isometry_residual, RN_uniform_check, Rescale_to_lp, Lp_W_norm,
                                   DecompositionConjugacy, Dissipative_decomposition_conjugacy)

@pytest.fixture
def profiles() -> list[MeasureProfile]:
    return [MeasureProfile("constant", value=2.0),
            MeasureProfile("geometric", ratio=0.8),
            MeasureProfile("periodic", values=[1.0, 3.0, 0.5]),
            MeasureProfile("table", values={"-1": 4.0, "2": 0.25}, default=1.0)]

def Probes(system: DiscreteDissipativeSystem, count=6) -> list[SeqPoint]:
    rng = np.random.default_rng(4)
    return [system.Random_function(rng, (a, a + 5)) for a in range(-12, -12 + 4*count, 4)]

class TestProfiles:

    def test_values(self, profiles: list[MeasureProfile]):

        constant, geometric, periodic, table = profiles

        assert constant(-7) == 2.0
        assert geometric(-3) == pytest.approx(0.8**3)
        assert geometric(0) == 1.0
        assert [periodic(n) for n in range(-1, 3)] == [0.5, 1.0, 3.0, 0.5]
        assert table(-1) == 4.0 and table(2) == 0.25 and table(5) == 1.0

        assert geometric.kind == ProfileType.geometric
        assert str(ProfileType.table) == "table"

    def test_json(self, profiles: list[MeasureProfile]):

        for profile in profiles:
            back = MeasureProfile.From_dict(profile.To_dict())
            assert back.kind == profile.kind
            assert [back(n) for n in range(-4, 5)] == [profile(n) for n in range(-4, 5)]

    def test_errors(self):

        with pytest.raises(ConfigError):
            MeasureProfile("harmonic")
        with pytest.raises(ConfigError):
            MeasureProfile("periodic", values=[])
        with pytest.raises(ConfigError):
            MeasureProfile("table", values={"0": 1.0})
        with pytest.raises(ConfigError):
            MeasureProfile.From_dict({"ratio": 0.5})

        with pytest.raises(ValueError):
            MeasureProfile("constant", value=0.0)(0)
        with pytest.raises(ValueError):
            MeasureProfile("periodic", values=[1.0, -1.0])(1)

class TestSystem:

    def test_compose(self):

        system = DiscreteDissipativeSystem(MeasureProfile("geometric", ratio=0.5))
        phi = SeqPoint(0, [1.0, 2.0, 3.0])

        composed = system.Compose(phi)

        assert composed.window == (-1, 1)
        assert composed.Get(0)[0] == 2.0
        # mu_n = 2^-|n|
        assert system.Lp_norm(phi) == pytest.approx(np.sqrt(1 + 4/2 + 9/4))
        assert system.Lp_norm(composed) == pytest.approx(np.sqrt(1/2 + 4 + 9/2))

    def test_cells(self):

        system = DiscreteDissipativeSystem(MeasureProfile("constant", value=1.0), p=1, cell=[1.0, 3.0])

        assert system.cellSize == 2
        assert np.allclose(system.Mu(4), [1.0, 3.0])
        assert system.Lp_norm(Impulse(2, [1.0, -1.0], p=1)) == pytest.approx(4.0)

        with pytest.raises(DimensionError):
            system.Lp_norm(Impulse(0, 1.0))
        with pytest.raises(AssertionError):
            DiscreteDissipativeSystem(MeasureProfile("constant"), cell=[1.0, 1.0, 1.0])
        with pytest.raises(AssertionError):
            DiscreteDissipativeSystem(MeasureProfile("constant"), p="inf")

    def test_json(self):

        system = DiscreteDissipativeSystem(MeasureProfile("periodic", values=[1.0, 2.0]), p=3, cell=[0.5, 0.5])

        back = DiscreteDissipativeSystem.From_dict(system.To_dict())

        assert back.p == 3 and back.cellSize == 2
        assert np.allclose(back.Mu_values(-3, 3), system.Mu_values(-3, 3))

        with pytest.raises(ConfigError):
            DiscreteDissipativeSystem.From_dict({"p": 2})

    @pytest.mark.parametrize("p", [1, 2, 3.5])
    def test_conjugacy(self, profiles: list[MeasureProfile], p: float):

        for profile in profiles:
            system = DiscreteDissipativeSystem(profile, p=p)
            probes = Probes(system)

            assert Verify_composition_conjugacy(system, probes) == 0.0
            assert Isometry_residual(system, probes) < 1e-12

    def test_identity_shift(self):

        system = DiscreteDissipativeSystem(MeasureProfile("constant"), cell=[1.0, 2.0])
        psi = Gamma_forward(system, Impulse(3, [1.0, 2.0]))

        shifted = Identity_shift(system, psi)

        assert isinstance(shifted, BNormPoint)
        assert shifted.window == (2, 2)
        assert np.array_equal(shifted.point.Get(2), [1.0, 2.0])

class TestRadonNikodym:

    def test_uniform(self):

        system = DiscreteDissipativeSystem(MeasureProfile("geometric", ratio=0.5))
        uniform, lo, hi = RN_uniform_check(system, (-40, 40))
        # 2^-40 < 1e-6
        assert not uniform
        assert lo == pytest.approx(0.5**40) and hi == 1.0

        system = DiscreteDissipativeSystem(MeasureProfile("constant", value=3.0))
        assert RN_uniform_check(system, (-40, 40)) == (True, 1.0, 1.0)

        system = DiscreteDissipativeSystem(MeasureProfile("periodic", values=[1.0, 2.0]))
        uniform, lo, hi = RN_uniform_check(system, (-40, 40))
        assert uniform and lo == 1.0 and hi == 2.0

    @pytest.mark.parametrize("p", [1, 2, 4])
    def test_rescale(self, profiles: list[MeasureProfile], p: float):

        for profile in profiles:
            system = DiscreteDissipativeSystem(profile, p=p)
            for phi in Probes(system, 3):
                psi = Gamma_forward(system, phi)
                assert Lp_W_norm(system, Rescale_to_lp(system, psi)) == pytest.approx(psi.Norm(), rel=1e-12)

class TestDecomposition:

    def test_coefficients(self):

        conjugacy = DecompositionConjugacy(WeightSeq.Constant(2.0))
        assert np.allclose(conjugacy.Coefficients(-3, 3), 2.0**np.arange(-3, 4))
        assert np.allclose(conjugacy.Coefficients(2, 4), [4.0, 8.0, 16.0])
        assert np.allclose(conjugacy.Coefficients(-4, -2), [1/16, 1/8, 1/4])

        # c_n = w_1 ... w_n and c_n = 1/(w_{n+1} ... w_0)
        w = WeightSeq.Periodic([2.0, 0.5, 3.0])
        conjugacy = DecompositionConjugacy(w)
        assert np.allclose(conjugacy.Coefficients(-2, 2), [1/(3.0*2.0), 1/2.0, 1.0, 0.5, 1.5])

    def test_scalar_points(self):

        conjugacy = DecompositionConjugacy(WeightSeq.Constant(0.5))

        with pytest.raises(DimensionError):
            conjugacy.H(Impulse(0, [1.0, 1.0]))

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.floats(0.5, 2.0), min_size=1, max_size=5), st.integers(-20, 20), st.integers(0, 2**16))
    def test_intertwining(self, values, a, seed):

        w = WeightSeq.Periodic(values)
        rng = np.random.default_rng(seed)
        probes = [Random_point(rng, (a, a + 6), 1) for _ in range(3)]

        residual, gap = Dissipative_decomposition_conjugacy(w, probes)

        assert residual < 1e-10
        assert gap < 1e-10

        x = probes[0]
        conjugacy = DecompositionConjugacy(w)
        assert Seq_norm(conjugacy.H_inverse(conjugacy.H(x)) - x) < 1e-12 * max(1.0, Seq_norm(x))
