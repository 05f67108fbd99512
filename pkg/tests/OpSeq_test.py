# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest
from hypothesis import given, settings, strategies as st

from EasyShift import np
# linalg
from EasyShift.Linalg import MAXNORM, UnboundedSequenceError, ZeroVectorError, VerificationError
# sequences
from EasyShift.Sequences import (OperatorSequence, Constant_sequence, Periodic_sequence, Listed_sequence,
                                 Partial_product, Weight, Frame_vector,
                                 Check_intertwining, Uniform_bound_check, Telescoping_residual)

def Rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])

@pytest.fixture
def random_sequence() -> OperatorSequence:
    """Bounded sequence of random well conditioned 2 x 2 matrices."""

    def generator(n: int) -> np.ndarray:
        rng = np.random.default_rng([7, n + 10_000])
        scales = rng.uniform(0.6, 1.6, size=2)
        return Rotation(rng.uniform(0, 2*np.pi)) @ np.diag(scales) @ Rotation(rng.uniform(0, 2*np.pi))

    return OperatorSequence(generator, C=2.0, dim=2, name="random")

class TestOperatorSequence:

    def test_bound(self):

        S = OperatorSequence(lambda n: 2*np.eye(2), C=1.5, dim=2)

        with pytest.raises(UnboundedSequenceError):
            S.Get(0)

        S = OperatorSequence(lambda n: 2*np.eye(2), C=1.5, dim=2, checkBound=False)
        assert np.allclose(S.Get(3), 2*np.eye(2))

        ok, witnessed = Uniform_bound_check(Constant_sequence(np.diag([2.0, 0.5]), C=2.1), (-5, 5))
        assert ok and witnessed == pytest.approx(2.0)

    def test_read_only(self):

        S = Constant_sequence(np.diag([2.0, 0.5]))

        with pytest.raises(ValueError):
            S.Get(0)[0, 0] = 1.0

    def test_periodic_offset(self):

        A, B = np.diag([2.0, 0.5]), np.diag([0.5, 2.0])
        S = Periodic_sequence([A, B], offset=1)

        assert S.period == 2 and S.isPeriodic
        assert np.array_equal(S.Get(1), A)
        assert np.array_equal(S.Get(2), B)
        assert np.array_equal(S.Get(-1), A)

    def test_listed(self):

        S = Listed_sequence({0: np.eye(2)}, np.diag([2.0, 0.5]))

        assert not S.isPeriodic
        assert np.array_equal(S[0], np.eye(2))
        assert np.array_equal(S[4], np.diag([2.0, 0.5]))

    def test_partial_product(self, random_sequence: OperatorSequence):

        S = random_sequence

        assert np.array_equal(Partial_product(S, 3, 2), np.eye(2))
        assert np.array_equal(Partial_product(S, 2, 2), S.Get(2))

        product = np.eye(2)
        for j in range(-3, 5):
            product = product @ S.Get(j)

        assert np.allclose(Partial_product(S, -3, 4), product, rtol=1e-12)
        # cached value
        assert np.allclose(Partial_product(S, -3, 4), product, rtol=1e-12)

class TestFrames:

    def test_weights_from_products(self, random_sequence: OperatorSequence):

        S = random_sequence
        x = np.array([0.3, -1.2])

        for n in [1, 2, 5]:
            expected = (np.linalg.norm(np.linalg.solve(Partial_product(S, 1, n-1), x))
                        / np.linalg.norm(np.linalg.solve(Partial_product(S, 1, n), x)))
            assert Weight(S, x, n) == pytest.approx(expected, rel=1e-12)

        for n in [0, -1, -4]:
            expected = (np.linalg.norm(Partial_product(S, n, 0) @ x)
                        / np.linalg.norm(Partial_product(S, n+1, 0) @ x))
            assert Weight(S, x, n) == pytest.approx(expected, rel=1e-12)

        e3 = np.linalg.solve(Partial_product(S, 1, 3), x)
        assert np.allclose(Frame_vector(S, x, 3), e3 / np.linalg.norm(e3))
        e_2 = Partial_product(S, -1, 0) @ x
        assert np.allclose(Frame_vector(S, x, -2), e_2 / np.linalg.norm(e_2))

    def test_identity_at_zero(self):

        S = Listed_sequence({0: np.eye(2)}, np.diag([2.0, 0.5]))

        assert Weight(S, [1.0, 1.0], 0) == pytest.approx(1.0)
        assert Weight(S, [1.0, 0.0], 3) == pytest.approx(2.0)
        assert Weight(S, [0.0, 1.0], -3) == pytest.approx(0.5)

    def test_log_tables(self, random_sequence: OperatorSequence):

        S = random_sequence
        x = np.array([1.0, 2.0])
        frame = S.Frame(x)

        LF = frame.Log_forward(6)
        LB = frame.Log_backward(6)

        assert LF[0] == pytest.approx(np.log(np.linalg.norm(x)))
        assert LF[6] == pytest.approx(np.log(np.linalg.norm(np.linalg.solve(Partial_product(S, 1, 6), x))))
        assert LB[4] == pytest.approx(np.log(np.linalg.norm(Partial_product(S, -4, 0) @ x)))

    def test_telescoping(self, random_sequence: OperatorSequence):

        for n in [1, 10, 40, 0, -10, -40]:
            assert Telescoping_residual(random_sequence, np.array([1.0, -0.5]), n) < 1e-10

    def test_zero_seed(self, random_sequence: OperatorSequence):

        with pytest.raises(ZeroVectorError):
            random_sequence.Frame(np.zeros(2))

    def test_max_norm_frames(self):

        J = np.array([[1.0, 1.0], [0.0, 1.0]])
        S = Constant_sequence(J, C=2.1, norm=MAXNORM)

        # |J^-n e2| = n in the max-norm
        for n in range(2, 10):
            assert Weight(S, [0.0, 1.0], n) == pytest.approx((n-1)/n)

    def test_invariant_anchor(self):

        L = np.array([[2.0, 1.0], [1.0, 1.0]])
        phi = (1 + np.sqrt(5)) / 2
        vPlus = np.array([phi, 1.0]) / np.sqrt(phi**2 + 1)
        vMinus = np.array([-1.0, phi]) / np.sqrt(phi**2 + 1)

        S = Constant_sequence(L)
        for v in (vPlus, vMinus):
            S.Anchor_seed(v, invariant=True)

        assert S.Frame(vPlus).mode == "invariant"
        assert np.allclose(S.Frame(vPlus).Weights(-40, 40), (3 + np.sqrt(5))/2, rtol=1e-12)
        assert np.allclose(S.Frame(vMinus).Weights(-40, 40), (3 - np.sqrt(5))/2, rtol=1e-12)
        assert Check_intertwining(S, vMinus, (-40, 40)) < 1e-12

        # a seed off the eigenlines is not invariant
        S.Anchor_seed([1.0, 0.0], invariant=True)
        with pytest.raises(VerificationError):
            S.Frame(np.array([1.0, 0.0])).Weight(5)

    @settings(max_examples=20, deadline=None)
    @given(st.floats(0, 2*np.pi), st.floats(0, 2*np.pi),
           st.floats(0.5, 2.0), st.floats(0.5, 2.0), st.floats(0, 2*np.pi))
    def test_intertwining(self, t1, t2, s1, s2, seedAngle):

        A = Rotation(t1) @ np.diag([s1, 1/s1])
        B = np.diag([s2, 1.0]) @ Rotation(t2)
        S = Periodic_sequence([A, B])
        x = np.array([np.cos(seedAngle), np.sin(seedAngle)])

        assert Check_intertwining(S, x, (-30, 30)) < 1e-12
