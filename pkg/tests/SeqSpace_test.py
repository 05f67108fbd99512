# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest
from hypothesis import given, settings, strategies as st

from EasyShift import np
# linalg
from EasyShift.Linalg import DimensionError, MAXNORM
# sequences
from EasyShift.Sequences import Constant_sequence, Periodic_sequence
# spaces
from EasyShift.Spaces import (SeqPoint, WeightSeq, Zeros, Impulse, Random_point, Seq_norm,
                              Shift_apply, Shift_apply_inverse, Shift_apply_iterate,
                              WShift_apply, WShift_apply_inverse,
                              Product_shift_apply, Product_norm, Skew_apply)

class TestSeqPoint:

    def test_window(self):

        pt = SeqPoint(-2, [[1.0, 0.0], [0.0, 2.0], [3.0, 4.0]])

        assert pt.window == (-2, 0)
        assert pt.dim == 2
        assert np.array_equal(pt.Get(0), [3.0, 4.0])
        assert np.array_equal(pt.Get(5), [0.0, 0.0])
        assert np.array_equal(pt.Values(-3, -1), [[0.0, 0.0], [1.0, 0.0], [0.0, 2.0]])
        assert pt.Extend(-4, 1).window == (-4, 1)
        assert pt.Restrict(-1, -1).Get(-1).tolist() == [0.0, 2.0]
        assert pt.Component(1).entries[:,0].tolist() == [0.0, 2.0, 4.0]

    def test_arithmetic(self):

        x = Impulse(0, [1.0, 2.0])
        y = Impulse(3, [0.5, 0.5])

        z = x + 2*y - x
        assert z.window == (0, 3)
        assert np.array_equal(z.Get(3), [1.0, 1.0])
        assert np.array_equal(z.Get(0), [0.0, 0.0])
        assert np.array_equal((-y).Get(3), [-0.5, -0.5])

        with pytest.raises(ValueError):
            x + Impulse(0, [1.0, 2.0], p=1)
        with pytest.raises(DimensionError):
            x + Impulse(0, 1.0)
        with pytest.raises(ValueError):
            SeqPoint(0, [np.inf])

    def test_norms(self):

        pt = SeqPoint(0, [[3.0, 4.0], [0.0, 1.0]], p=1)
        assert Seq_norm(pt) == pytest.approx(6.0)
        assert Seq_norm(pt, MAXNORM) == pytest.approx(5.0)

        pt = SeqPoint(0, [[3.0, 4.0], [0.0, 1.0]], p="inf")
        assert Seq_norm(pt) == pytest.approx(5.0)

        pt = SeqPoint(0, [[3.0, 4.0], [0.0, 1.0]])
        assert Seq_norm(pt) == pytest.approx(np.sqrt(26.0))

    def test_json(self):

        pt = SeqPoint(-1, [[1.0, 0.0], [0.0, 2.0]], p="inf")
        dct = pt.To_dict()

        assert dct["window"] == [-1, 0] and dct["p"] == "inf"
        back = SeqPoint.From_dict(dct)
        assert back.window == pt.window and np.array_equal(back.entries, pt.entries)

        # missing indexes are zero
        sparse = SeqPoint.From_dict({"window": [0, 4], "entries": [[2, [1.0]]]})
        assert sparse.entries[:,0].tolist() == [0.0, 0.0, 1.0, 0.0, 0.0]

        with pytest.raises(ValueError):
            SeqPoint.From_dict({"window": [0, 1], "entries": [[3, [1.0]]]})
        with pytest.raises(DimensionError):
            SeqPoint.From_dict({"window": [0, 1], "entries": [[0, [1.0]]]}, dim=2)

class TestWeightSeq:

    def test_band(self):

        w = WeightSeq(lambda n: 0.5 if n <= 0 else 2.0, C=2.1)
        assert w.Values(-1, 2).tolist() == [0.5, 0.5, 2.0, 2.0]

        w = WeightSeq(lambda n: 3.0, C=2.0)
        with pytest.raises(ValueError):
            w(0)

        with pytest.raises(AssertionError):
            WeightSeq(lambda n: 1.0, C=1.0)

    def test_constructors(self):

        assert WeightSeq.Constant(0.5).C == pytest.approx(2.1)
        w = WeightSeq.Periodic([2.0, 0.5], offset=1)
        assert w(1) == 2.0 and w(2) == 0.5 and w.period == 2

class TestShifts:

    def test_shift(self):

        A = np.array([[1.0, 2.0], [0.0, 1.0]])
        S = Constant_sequence(A, C=3.0)

        shifted = Shift_apply(S, Impulse(3, [1.0, 1.0]))

        assert shifted.window == (2, 2)
        assert np.allclose(shifted.Get(2), [3.0, 1.0])

        back = Shift_apply_inverse(S, shifted)
        assert back.window == (3, 3)
        assert np.allclose(back.Get(3), [1.0, 1.0])

        with pytest.raises(DimensionError):
            Shift_apply(S, Impulse(0, 1.0))

    def test_iterate(self):

        S = Periodic_sequence([np.diag([2.0, 0.5]), np.diag([0.5, 2.0])])
        pt = Impulse(0, [1.0, 1.0])

        twice = Shift_apply_iterate(S, pt, 2)
        assert twice.window == (-2, -2)
        # S_-1 S_0 = identity
        assert np.allclose(twice.Get(-2), [1.0, 1.0])
        assert np.allclose(Shift_apply_iterate(S, twice, -2).Get(0), [1.0, 1.0])

    @settings(max_examples=20, deadline=None)
    @given(st.integers(-20, 20), st.integers(1, 6), st.integers(0, 2**16))
    def test_inverse(self, a, length, seed):

        rng = np.random.default_rng(seed)
        S = Periodic_sequence([np.array([[2.0, 1.0], [1.0, 1.0]]), np.array([[1.0, 0.5], [0.0, 1.0]])])
        pt = Random_point(rng, (a, a+length-1), 2)

        back = Shift_apply_inverse(S, Shift_apply(S, pt))

        assert back.window == pt.window
        assert Seq_norm(back - pt) < 1e-12 * max(1.0, Seq_norm(pt))

    def test_weighted_shift(self):

        w = WeightSeq.Periodic([2.0, 0.5])
        pt = SeqPoint(0, [1.0, 1.0, 1.0])

        shifted = WShift_apply(w, pt)
        assert shifted.window == (-1, 1)
        assert shifted.entries[:,0].tolist() == [2.0, 0.5, 2.0]
        assert np.allclose(WShift_apply_inverse(w, shifted).entries, pt.entries)

        with pytest.raises(DimensionError):
            WShift_apply(w, Impulse(0, [1.0, 1.0]))

    def test_product_and_skew(self):

        w = WeightSeq.Constant(0.5)
        x, y = Impulse(1, 1.0), Impulse(1, 2.0)

        pts = Product_shift_apply([w, w], [x, y])
        assert Product_norm(pts) == pytest.approx(1.5)

        with pytest.raises(DimensionError):
            Product_shift_apply([w], [x, y])

        sx, sy = Skew_apply(w, (x, y))
        assert sx.Get(0)[0] == pytest.approx(1.5)
        assert sy.Get(0)[0] == pytest.approx(1.0)
        assert Seq_norm(Zeros(-1, 1, 2)) == 0.0
