# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

import pytest
from hypothesis import given, settings, assume, strategies as st

from EasyShift import np
# linalg
from EasyShift.Linalg import (NormType, NormSpec, EUCLIDEAN, MAXNORM, Parse_p, Half_window,
                              ConfigError, DimensionError, ZeroVectorError,
                              SingularMatrixError, DegenerateBasisError,
                              As_vec, As_mat, Apply, Vnorm, Det, Invert, Operator_norm, Sampled_operator_norm,
                              Cos_angle, Gram_det, Coordinates_in_basis,
                              Projection_operator_norm, Projection_operator_norms)

class TestNormSpec:

    def test_kinds(self):

        assert NormSpec(NormType.p, 2).kind == NormType.euclidean
        assert NormSpec(NormType.p, np.inf).kind == NormType.max
        assert NormSpec(NormType.p, 3).kind == NormType.p
        assert EUCLIDEAN.isEuclidean and not MAXNORM.isEuclidean

        with pytest.raises(AssertionError):
            NormSpec(NormType.p, 0.5)

    def test_dual(self):

        assert NormSpec(NormType.p, 3).dual.p == pytest.approx(1.5)
        assert MAXNORM.dual.p == 1
        assert np.isinf(NormSpec(NormType.p, 1).dual.p)
        assert EUCLIDEAN.dual == EUCLIDEAN

    def test_json(self):

        assert MAXNORM.To_dict() == {"kind": "max", "p": "inf"}
        assert NormSpec.From_dict(MAXNORM.To_dict()) == MAXNORM
        assert NormSpec.From_dict({"kind": "p", "p": 3}) == NormSpec(NormType.p, 3)

    def test_parse_p(self):

        assert np.isinf(Parse_p("inf"))
        assert Parse_p(1) == 1.0

        with pytest.raises(ConfigError):
            Parse_p(0.5)

    def test_half_window(self):

        assert Half_window((-7, 9)) == (-3, 4)
        assert Half_window((0, 1)) == (0, 0)

class TestMatrices:

    def test_apply_and_norms(self):

        phi = (np.sqrt(5) - 1) / 2
        L = np.array([[2.0, 1.0], [1.0, 1.0]])

        assert np.allclose(Apply(np.eye(2), [3.0, 4.0]), [3.0, 4.0])
        assert np.allclose(Apply(L, [1.0, phi]), (3 + np.sqrt(5))/2 * np.array([1.0, phi]))
        assert np.allclose(Apply([[1.0, 1.0], [0.0, 1.0]], [0.0, 1.0]), [1.0, 1.0])
        with pytest.raises(DimensionError):
            Apply(np.eye(2), [1.0, 2.0, 3.0])

        assert Vnorm([3.0, 4.0]) == pytest.approx(5.0)
        assert Vnorm([-7.0, 1.0], MAXNORM) == 7.0
        assert Vnorm([1.0, 1.0, 1.0], NormSpec(NormType.p, 1)) == pytest.approx(3.0)
        assert Vnorm(np.zeros(3)) == 0.0

    def test_det_and_invert(self):

        rng = np.random.default_rng(1)

        for d in range(1, 5):
            for _ in range(5):
                m = rng.uniform(-1, 1, size=(d, d)) + 2*np.eye(d)
                assert Det(m) == pytest.approx(np.linalg.det(m), rel=1e-10, abs=1e-12)
                assert np.abs(Invert(m) @ m - np.eye(d)).max() < 1e-12

    def test_singular(self):

        with pytest.raises(SingularMatrixError):
            Invert(np.array([[1.0, 2.0], [2.0, 4.0]]))

        with pytest.raises(SingularMatrixError):
            Invert(np.zeros((3, 3)))

    def test_checks(self):

        with pytest.raises(DimensionError):
            As_mat(np.ones((2, 3)))
        with pytest.raises(DimensionError):
            As_mat(np.eye(2), 3)
        with pytest.raises(DimensionError):
            As_vec([1.0, 2.0], 3)
        with pytest.raises(ValueError):
            As_vec([1.0, np.nan])

class TestOperatorNorm:

    def test_exact_norms(self):

        m = np.array([[1.0, -2.0], [3.0, 0.5]])

        for norm in [NormSpec(NormType.p, 1), EUCLIDEAN, MAXNORM]:
            assert Operator_norm(m, norm) == pytest.approx(np.linalg.norm(m, norm.ord))

    def test_sampled_norm_of_diagonal(self):

        norm = NormSpec(NormType.p, 3)

        value, uncertainty = Sampled_operator_norm(np.diag([2.0, 0.5]), norm)

        assert value == pytest.approx(2.0, rel=1e-9)
        assert uncertainty >= 0

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.floats(-5, 5), min_size=4, max_size=4))
    def test_sampled_norm_bounds(self, entries):

        m = np.array(entries).reshape(2, 2)
        assume(np.abs(m).max() > 1e-3)
        p = 3.0

        value = Operator_norm(m, NormSpec(NormType.p, p))

        columns = np.linalg.norm(m, p, axis=0)
        rieszThorin = np.linalg.norm(m, 1)**(1/p) * np.linalg.norm(m, np.inf)**(1-1/p)

        assert value >= columns.max() * (1 - 1e-12)
        assert value <= rieszThorin * (1 + 1e-9)

class TestAngles:

    def test_cos_angle(self):

        assert Cos_angle([1, 0], [0, 3]) == pytest.approx(0.0)
        assert Cos_angle([1, 1], [2, 2]) == pytest.approx(1.0)

        with pytest.raises(ZeroVectorError):
            Cos_angle([0, 0], [1, 0])

    def test_coordinates(self):

        basis = [[1.0, 0.0], [1.0, 1.0]]

        assert Gram_det(basis) == pytest.approx(1.0)
        assert np.allclose(Coordinates_in_basis([3.0, 2.0], basis), [1.0, 2.0])

        with pytest.raises(DegenerateBasisError):
            Coordinates_in_basis([1.0, 0.0], [[1.0, 1.0], [2.0, 2.0]])

    def test_projection_norm_planar(self):

        for theta in [0.1, 0.7, np.pi/2, 2.5]:
            basis = [[1.0, 0.0], [np.cos(theta), np.sin(theta)]]
            expected = 1 / np.sin(theta)
            assert Projection_operator_norm(0, basis) == pytest.approx(expected)
            assert Projection_operator_norm(1, basis) == pytest.approx(expected)

            frames = np.array(basis).T[np.newaxis]
            assert np.allclose(Projection_operator_norms(frames), expected)

    def test_projection_norm_other_norms(self):

        # orthonormal bases have unit projections in every p-norm
        for norm in [NormSpec(NormType.p, 1), NormSpec(NormType.p, 3), MAXNORM]:
            assert Projection_operator_norm(1, np.eye(3), norm) == pytest.approx(1.0)

        basis = [[1.0, 0.0], [1.0, 1.0]]
        # a_0(v) = v_0 - v_1 has max-norm 2 on the max-norm unit ball
        assert Projection_operator_norm(0, basis, MAXNORM) == pytest.approx(2.0)

    def test_degenerate_frame_index(self):

        frames = np.array([np.eye(2), [[1.0, 1.0], [0.0, 0.0]], np.eye(2)])

        with pytest.raises(DegenerateBasisError) as info:
            Projection_operator_norms(frames, indexes=np.array([-1, 0, 1]))

        assert info.value.index == 0

class TestPackage:

    def test_headers(self):

        import EasyShift
        from pathlib import Path

        root = Path(EasyShift.__file__).parent
        files = sorted(root.rglob("*.py")) + sorted(Path(__file__).parent.glob("*.py"))
        assert files

        for file in files:
            first = file.read_text(encoding="utf-8").splitlines()[0]
            assert first == "# Copyright (C) 2026 The EasyShift developers.", file
