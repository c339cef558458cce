"""Dense two-phase simplex with Bland's anti-cycling rule.

Solves small linear programs of the form::

    minimize    c @ x
    subject to  A_eq @ x == b_eq
                A_ub @ x <= b_ub
                x >= 0

The problems in this package have at most a few dozen variables, so a dense
tableau is the simplest robust choice.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalFailure

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: np.ndarray | None
    fun: float | None
    iterations: int

    @property
    def success(self):
        return self.status == OPTIMAL


def _pivot(T, r, c, tol):
    T[r] /= T[r, c]
    for i in range(T.shape[0]):
        if i != r and T[i, c] != 0.0:
            T[i] -= T[i, c] * T[r]
    T[np.abs(T) < tol * 1e-3] = 0.0


def _run(T, basis, allowed, tol, it, max_iter):
    """Iterate Bland's rule on tableau ``T`` whose last row holds reduced costs."""
    while True:
        costs = T[-1, allowed]
        neg = np.nonzero(costs < -tol)[0]
        if neg.size == 0:
            return OPTIMAL, it
        j = allowed[neg[0]]
        col = T[:-1, j]
        rhs = T[:-1, -1]
        pos = col > tol
        if not pos.any():
            return UNBOUNDED, it
        ratios = np.full(col.shape, np.inf)
        ratios[pos] = rhs[pos] / col[pos]
        best = ratios.min()
        ties = np.nonzero(ratios <= best + 1e-12 * max(1.0, abs(best)))[0]
        r = min(ties, key=lambda i: basis[i])
        _pivot(T, r, j, tol)
        basis[r] = j
        it += 1
        if it > max_iter:
            raise NumericalFailure(f"simplex exceeded {max_iter} pivots")


def solve_lp(c, A_eq=None, b_eq=None, A_ub=None, b_ub=None, tol=1e-9, max_iter=None) -> LPResult:
    """Minimize ``c @ x`` over the polyhedron described above.

    Returns an :class:`LPResult` whose ``status`` is ``"optimal"``,
    ``"infeasible"`` or ``"unbounded"``.

    Raises
    ------
    NumericalFailure
        If the pivot count exceeds ``max_iter`` (default ``50 * (m + n)``).
    """
    c = np.asarray(c, dtype=float).ravel()
    n = c.size
    blocks, rhs = [], []
    n_slack = 0 if A_ub is None else np.asarray(A_ub).shape[0]
    if A_eq is not None and np.size(A_eq):
        A = np.asarray(A_eq, float).reshape(-1, n)
        blocks.append(np.hstack([A, np.zeros((A.shape[0], n_slack))]))
        rhs.append(np.asarray(b_eq, float).ravel())
    if n_slack:
        A = np.asarray(A_ub, float).reshape(-1, n)
        blocks.append(np.hstack([A, np.eye(n_slack)]))
        rhs.append(np.asarray(b_ub, float).ravel())
    n_tot = n + n_slack
    if not blocks:
        # only x >= 0
        if np.any(c < -tol):
            return LPResult(UNBOUNDED, None, None, 0)
        return LPResult(OPTIMAL, np.zeros(n), 0.0, 0)

    A = np.vstack(blocks)
    b = np.concatenate(rhs)
    flip = b < 0
    A[flip] *= -1.0
    b[flip] *= -1.0
    m = A.shape[0]
    if max_iter is None:
        max_iter = 50 * (m + n_tot)

    # phase 1: one artificial per row, minimize their sum
    T = np.zeros((m + 1, n_tot + m + 1))
    T[:m, :n_tot] = A
    T[:m, n_tot:n_tot + m] = np.eye(m)
    T[:m, -1] = b
    T[-1, :n_tot] = -A.sum(axis=0)
    T[-1, -1] = -b.sum()
    basis = list(range(n_tot, n_tot + m))
    status, it = _run(T, basis, np.arange(n_tot + m), tol, 0, max_iter)
    if -T[-1, -1] > tol * max(1.0, np.abs(b).max()):
        return LPResult(INFEASIBLE, None, None, it)

    # drive remaining artificials out of the basis; rows where that is
    # impossible are linearly dependent and get dropped
    keep = []
    for r in range(m):
        if basis[r] >= n_tot:
            cand = np.nonzero(np.abs(T[r, :n_tot]) > tol)[0]
            if cand.size == 0:
                continue
            _pivot(T, r, cand[0], tol)
            basis[r] = int(cand[0])
        keep.append(r)
    T = np.vstack([T[keep][:, list(range(n_tot)) + [-1]], np.zeros((1, n_tot + 1))])
    basis = [basis[r] for r in keep]

    # phase 2
    cost = np.concatenate([c, np.zeros(n_slack)])
    cb = cost[basis]
    T[-1, :n_tot] = cost - cb @ T[:-1, :n_tot]
    T[-1, -1] = -cb @ T[:-1, -1]
    status, it = _run(T, basis, np.arange(n_tot), tol, it, max_iter)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None, it)
    x = np.zeros(n_tot)
    x[basis] = T[:-1, -1]
    x = np.clip(x[:n], 0.0, None)
    return LPResult(OPTIMAL, x, float(c @ x), it)
