"""Reference implementations written independently of the package code paths.

Everything here uses plain Python loops and ``math.log2`` over explicit
conditional probabilities, never the package's entropy helpers.
"""
from math import log2

import numpy as np


def h(ps):
    return -sum(x * log2(x) for x in ps if x > 0)


def h2(q):
    return h([q, 1 - q])


def cond_entropy_double_sum(P):
    """H(A|B) = -sum_j p(j) sum_i p(i|j) log p(i|j) with rows = A, columns = B."""
    P = np.asarray(P, float)
    total = 0.0
    for j in range(P.shape[1]):
        pj = P[:, j].sum()
        if pj <= 0:
            continue
        total -= pj * sum((P[i, j] / pj) * log2(P[i, j] / pj) for i in range(P.shape[0]) if P[i, j] > 0)
    return total


def mutual_info_loops(P):
    P = np.asarray(P, float)
    pa, pb = P.sum(axis=1), P.sum(axis=0)
    return sum(
        P[i, j] * log2(P[i, j] / (pa[i] * pb[j]))
        for i in range(P.shape[0]) for j in range(P.shape[1]) if P[i, j] > 0
    )


def noisy_loops(P, M):
    """p'(i, k) = sum_j p(i, j) M(k, j), written out."""
    P, M = np.asarray(P, float), np.asarray(M, float)
    out = np.zeros((P.shape[0], M.shape[0]))
    for i in range(P.shape[0]):
        for k in range(M.shape[0]):
            out[i, k] = sum(P[i, j] * M[k, j] for j in range(P.shape[1]))
    return out


def discord_loops(P, M):
    return mutual_info_loops(P) - mutual_info_loops(noisy_loops(P, M))


def polytope_grid_2x2(P, step=1e-3, slack=2e-3):
    """Grid over 2x2 column-stochastic M = [[a, b], [1-a, 1-b]].

    Returns the (a, b) pairs whose fixed-point residual max|p M^T - p| is
    within ``slack``.
    """
    P = np.asarray(P, float)
    vals = np.linspace(0.0, 1.0, int(round(1 / step)) + 1)
    a, b = np.meshgrid(vals, vals, indexing="ij")
    # p M^T column 0 = p0 * a + p1 * b, column 1 = rest
    r0 = np.abs(P[:, 0, None, None] * a + P[:, 1, None, None] * b - P[:, 0, None, None])
    r1 = np.abs(P[:, 0, None, None] * (1 - a) + P[:, 1, None, None] * (1 - b) - P[:, 1, None, None])
    resid = np.maximum(r0.max(axis=0), r1.max(axis=0))
    ok = resid <= slack
    return a[ok], b[ok]
