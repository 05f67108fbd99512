# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Numba functions to speed up sliding-window products of weights."""

import numpy as np
from numba import njit, prange

__USE_CACHE = True
__USE_PARALLEL = True
__USE_FASTMATH = False

@njit(cache=__USE_CACHE, parallel=__USE_PARALLEL, fastmath=__USE_FASTMATH)
def Window_extrema(logw: np.ndarray, lengthMax: int) -> tuple[np.ndarray, np.ndarray]:
    """For each window length l in [1, lengthMax], returns the max and min over
    start positions s of logw[s] + ... + logw[s+l-1].

    Parameters
    ----------
    logw : np.ndarray
        log of consecutive weights (N)
    lengthMax : int
        largest window length (<= N)

    Returns
    -------
    tuple[np.ndarray, np.ndarray]
        maxs (lengthMax), mins (lengthMax)
    """

    N = logw.shape[0]

    cumsum = np.zeros(N+1)
    for i in range(N):
        cumsum[i+1] = cumsum[i] + logw[i]

    maxs = np.full(lengthMax, -np.inf)
    mins = np.full(lengthMax, np.inf)

    for l in prange(1, lengthMax+1):
        vMax = -np.inf
        vMin = np.inf
        for s in range(N - l + 1):
            v = cumsum[s+l] - cumsum[s]
            if v > vMax: vMax = v
            if v < vMin: vMin = v
        maxs[l-1] = vMax
        mins[l-1] = vMin

    return maxs, mins

@njit(cache=__USE_CACHE, fastmath=__USE_FASTMATH)
def Series_partial_sums(logTerms: np.ndarray, limit: float) -> tuple[float, int]:
    """Sums exp(logTerms) until a term is negligible (< 1e-17 times the sum) or the sum exceeds limit.

    Returns
    -------
    tuple[float, int]
        sum, number of summed terms
    """

    total = 0.0
    count = 0
    for i in range(logTerms.shape[0]):
        term = np.exp(logTerms[i])
        total += term
        count += 1
        if total > limit:
            break
        if term < 1e-17 * total:
            break

    return total, count
