# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Dense real linear algebra for fibers of dimension 1 <= d <= 4."""

from typing import Union

import numpy as np
import scipy.optimize as optimize

from ._utils import (NormSpec, EUCLIDEAN,
                     DIM_MAX, DET_TOL, N_SPHERE,
                     DimensionError, SingularMatrixError, DegenerateBasisError, ZeroVectorError)

# ----------------------------------------------
# Vectors and matrices
# ----------------------------------------------

def As_vec(v, dim: int=None) -> np.ndarray:
    """Returns v as a finite float vector (of dimension dim)."""

    vec = np.asarray(v, dtype=float).ravel()

    if not np.all(np.isfinite(vec)):
        raise ValueError("vector entries must be finite")
    if dim is not None and vec.size != dim:
        raise DimensionError(f"vector of dimension {vec.size} given, {dim} expected")

    return vec

def As_mat(m, dim: int=None) -> np.ndarray:
    """Returns m as a finite float square matrix (of dimension dim)."""

    mat = np.atleast_2d(np.asarray(m, dtype=float))

    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"square matrix expected, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise ValueError("matrix entries must be finite")
    if dim is not None and mat.shape[0] != dim:
        raise DimensionError(f"matrix of dimension {mat.shape[0]} given, {dim} expected")

    return mat

def Apply(m: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Returns m v."""

    m = As_mat(m)
    v = As_vec(v, m.shape[0])

    return m @ v

def Det(m: np.ndarray) -> float:
    """Closed-form determinant for d <= 4 (Laplace expansion along the first row)."""

    m = As_mat(m)
    d = m.shape[0]

    if d == 1:
        return float(m[0,0])
    elif d == 2:
        return float(m[0,0]*m[1,1] - m[0,1]*m[1,0])
    elif d == 3:
        return float(m[0,0]*(m[1,1]*m[2,2] - m[1,2]*m[2,1])
                     - m[0,1]*(m[1,0]*m[2,2] - m[1,2]*m[2,0])
                     + m[0,2]*(m[1,0]*m[2,1] - m[1,1]*m[2,0]))
    else:
        return float(sum((-1)**j * m[0,j] * Det(_Minor(m, 0, j)) for j in range(d)))

def _Minor(m: np.ndarray, i: int, j: int) -> np.ndarray:
    return np.delete(np.delete(m, i, axis=0), j, axis=1)

def Invert(m: np.ndarray, tol=DET_TOL) -> np.ndarray:
    """Returns the inverse of m with the cofactor formula (d <= 4).

    Raises
    ------
    SingularMatrixError
        if |det(m)| <= tol
    """

    m = As_mat(m)
    d = m.shape[0]
    assert d <= DIM_MAX, f"d must be <= {DIM_MAX}"

    det = Det(m)
    if np.abs(det) <= tol:
        raise SingularMatrixError(f"singular matrix (|det| = {np.abs(det):.3e})")

    if d == 1:
        return np.array([[1/m[0,0]]])

    # adj[j,i] = (-1)^(i+j) det(minor(i,j))
    adj = np.zeros_like(m)
    for i in range(d):
        for j in range(d):
            adj[j,i] = (-1)**(i+j) * Det(_Minor(m, i, j))

    return adj / det

# ----------------------------------------------
# Norms
# ----------------------------------------------

def Vnorm(v: np.ndarray, norm: NormSpec=EUCLIDEAN) -> float:
    """Returns the fiber norm of v."""
    return float(np.linalg.norm(As_vec(v), norm.ord))

def Operator_norm(m: np.ndarray, norm: NormSpec=EUCLIDEAN) -> float:
    """Returns the operator norm of m induced by the fiber norm.\n
    Exact for p in {1, 2, inf}, sampled with local refinement otherwise.
    """

    m = As_mat(m)

    if norm.p in (1, 2) or np.isinf(norm.p):
        return float(np.linalg.norm(m, norm.ord))

    value, _ = Sampled_operator_norm(m, norm)
    return value

def _Sphere_directions(d: int, n: int=N_SPHERE) -> np.ndarray:
    """Returns n unit directions (n, d) spread on the Euclidean sphere."""

    if d == 1:
        return np.array([[1.0]])

    if d == 2:
        theta = np.linspace(0, np.pi, n, endpoint=False)
        return np.column_stack([np.cos(theta), np.sin(theta)])

    if d == 3:
        # golden-angle (Fibonacci) lattice
        i = np.arange(n) + 0.5
        z = 1 - 2*i/n
        r = np.sqrt(1 - z**2)
        phi = np.pi * (3 - np.sqrt(5)) * i
        return np.column_stack([r*np.cos(phi), r*np.sin(phi), z])

    rng = np.random.default_rng(d)
    dirs = rng.normal(size=(n, d))
    return dirs / np.linalg.norm(dirs, axis=1)[:,np.newaxis]

def Sampled_operator_norm(m: np.ndarray, norm: NormSpec=EUCLIDEAN, n: int=N_SPHERE) -> tuple[float, float]:
    """Samples sup |m v| / |v| over n directions then refines the best one.

    Returns
    -------
    tuple[float, float]
        value, uncertainty (gap between the refined and the best sampled value)
    """

    m = As_mat(m)
    d = m.shape[0]

    dirs = _Sphere_directions(d, n)
    ratios = np.linalg.norm(dirs @ m.T, norm.ord, axis=1) / np.linalg.norm(dirs, norm.ord, axis=1)
    best = int(np.argmax(ratios))

    if d == 1:
        return float(ratios[best]), 0.0

    def func(x: np.ndarray) -> float:
        nx = np.linalg.norm(x, norm.ord)
        if nx == 0:
            return 0.0
        return - np.linalg.norm(m @ x, norm.ord) / nx

    res = optimize.minimize(func, dirs[best], method="Nelder-Mead",
                            options={"xatol": 1e-12, "fatol": 1e-14, "maxiter": 4000})
    value = max(float(-res.fun), float(ratios[best]))

    return value, float(np.abs(value - ratios[best]))

# ----------------------------------------------
# Angles and bases
# ----------------------------------------------

def Cos_angle(u: np.ndarray, v: np.ndarray) -> float:
    """Returns <u,v> / (|u| |v|) (Euclidean), clamped to [-1, 1]."""

    u = As_vec(u)
    v = As_vec(v, u.size)

    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise ZeroVectorError("cos_angle needs nonzero vectors")

    return float(np.clip(np.dot(u, v) / (nu*nv), -1.0, 1.0))

def _Basis_matrix(basis: Union[list, np.ndarray]) -> np.ndarray:
    """Returns the matrix whose columns are the basis vectors."""

    vectors = [As_vec(b) for b in basis]
    d = vectors[0].size
    if len(vectors) != d or any(b.size != d for b in vectors):
        raise DimensionError("a basis of R^d needs d vectors of dimension d")

    return np.column_stack(vectors)

def Gram_det(basis: Union[list, np.ndarray]) -> float:
    """Returns the Gram determinant of the basis."""
    B = _Basis_matrix(basis)
    return Det(B.T @ B)

def Coordinates_in_basis(v: np.ndarray, basis: Union[list, np.ndarray], tol=DET_TOL) -> np.ndarray:
    """Returns the coefficients a with v = sum_i a_i basis[i].

    Raises
    ------
    DegenerateBasisError
        if the Gram determinant is <= tol
    """

    B = _Basis_matrix(basis)
    v = As_vec(v, B.shape[0])

    if Det(B.T @ B) <= tol:
        raise DegenerateBasisError("degenerate basis")

    return np.linalg.solve(B, v)

def Projection_operator_norm(targetIndex: int, basis: Union[list, np.ndarray], norm: NormSpec=EUCLIDEAN, tol=DET_TOL) -> float:
    """Returns the operator norm of the projection v -> a_i(v) b_i along the other basis vectors.

    The coefficient a_i(v) is the i-th row r_i of B^-1 applied to v, so the norm is
    |b_i| times the dual norm of r_i. For d = 2 and the Euclidean norm it reduces to
    1/sin(angle(b_1, b_2)).
    """

    B = _Basis_matrix(basis)
    d = B.shape[0]
    assert 0 <= targetIndex < d, "targetIndex must be in [0, d)"

    gram = B.T @ B
    if Det(gram) <= tol:
        raise DegenerateBasisError("degenerate basis")

    bNorm = np.linalg.norm(B[:,targetIndex], norm.ord)

    if d == 2 and norm.isEuclidean:
        cos = Cos_angle(B[:,0], B[:,1])
        sin = np.sqrt(max(1 - cos**2, 0.0))
        # |a_i b_i| = dist(v, span(b_j)) / sin
        return float(1/sin)

    rows = Invert(B, tol=0.0)
    return float(bNorm * np.linalg.norm(rows[targetIndex], norm.dual.ord))

def Projection_operator_norms(frames: np.ndarray, norm: NormSpec=EUCLIDEAN, tol=DET_TOL, indexes: np.ndarray=None) -> np.ndarray:
    """Vectorized projection norms.

    Parameters
    ----------
    frames : np.ndarray
        stack (N, d, d) whose columns are the frame vectors at each index
    norm : NormSpec, optional
        fiber norm, by default EUCLIDEAN
    tol : float, optional
        Gram determinant tolerance, by default DET_TOL
    indexes : np.ndarray, optional
        sequence indexes used in the error message

    Returns
    -------
    np.ndarray
        (N, d) projection norms
    """

    frames = np.asarray(frames, dtype=float)
    N, d, _ = frames.shape

    grams = np.einsum("nki,nkj->nij", frames, frames)
    dets = np.linalg.det(grams)
    bad = np.where(dets <= tol)[0]
    if bad.size > 0:
        index = None if indexes is None else int(indexes[bad[0]])
        raise DegenerateBasisError("degenerate frame", index)

    rows = np.linalg.inv(frames)
    bNorms = np.linalg.norm(frames, norm.ord, axis=1)
    rNorms = np.linalg.norm(rows, norm.dual.ord, axis=2)

    return bNorms * rNorms
