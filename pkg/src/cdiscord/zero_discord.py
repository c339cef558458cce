"""Zero-discord states for a fixed channel, and zero-discord channels for a fixed state.

A state ``p`` has zero discord under ``M`` exactly when ``p @ M.T == p``.

* For fixed ``M`` the solutions are mixtures of ``e_j ⊗ m_k`` where the
  ``m_k`` are the extreme stationary vectors of ``M`` (one per closed
  recurrent class of the Markov chain ``x -> M x``).
* For fixed ``p`` the condition is linear in ``M``; with column-stacking
  ``vec`` it reads ``kron(p, I) @ vec(M) == vec(p.T)``. Together with column
  sums and nonnegativity this is a polytope, explored by linear programming.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .channels import StochasticChannel, _renormalize, identity_channel
from .discord import is_zero_discord
from .distributions import JointDistribution
from .errors import DimensionTooLarge, InvalidWeights, NumericalFailure
from .linalg import kron, vec
from .simplex import solve_lp

STATIONARY_RESIDUAL = 1e-8


@dataclass(frozen=True, eq=False)
class StationaryFamily:
    """Extreme stationary vectors of a channel, one per row of ``vectors``."""

    channel: StochasticChannel
    vectors: np.ndarray

    @property
    def channel_dim(self):
        return self.channel.dim

    @property
    def R(self):
        return self.vectors.shape[0]

    def to_json(self):
        return {"channel_dim": self.channel_dim, "R": self.R, "vectors": self.vectors.tolist()}


def recurrent_classes(m: StochasticChannel):
    """Closed communicating classes of the chain with transitions ``j -> i`` when ``M[i, j] > 0``.

    Returned as sorted index arrays, ordered by their smallest member.
    """
    adj = csr_matrix((m.matrix > 0).T.astype(np.int8))
    n, labels = connected_components(adj, directed=True, connection="strong")
    classes = []
    for k in range(n):
        members = np.nonzero(labels == k)[0]
        reach = np.nonzero((m.matrix[:, members] > 0).any(axis=1))[0]
        if np.all(np.isin(reach, members)):
            classes.append(members)
    return sorted(classes, key=lambda c: c[0])


def stationary_family(m: StochasticChannel) -> StationaryFamily:
    """Extreme points of ``{x >= 0, sum(x) = 1, M x = x}``.

    Each closed recurrent class carries exactly one stationary vector; these
    vectors have disjoint supports and are therefore linearly independent.

    Raises
    ------
    NumericalFailure
        If a class's stationary solve leaves a residual above ``1e-8``.
    """
    d = m.dim
    vectors = []
    for cls in recurrent_classes(m):
        sub = m.matrix[np.ix_(cls, cls)]
        k = len(cls)
        lhs = np.vstack([sub - np.eye(k), np.ones((1, k))])
        rhs = np.zeros(k + 1)
        rhs[-1] = 1.0
        x, *_ = np.linalg.lstsq(lhs, rhs, rcond=None)
        x = np.clip(x, 0.0, None)
        x /= x.sum()
        v = np.zeros(d)
        v[cls] = x
        resid = np.max(np.abs(m.matrix @ v - v))
        if resid > STATIONARY_RESIDUAL:
            raise NumericalFailure(f"stationary residual {resid:.3g} on class {cls.tolist()}")
        vectors.append(v)
    vectors = np.array(vectors)
    vectors.setflags(write=False)
    return StationaryFamily(m, vectors)


@dataclass(frozen=True, eq=False)
class ZeroDiscordState:
    weights: np.ndarray
    family: StationaryFamily

    @property
    def state(self) -> JointDistribution:
        return make_zero_discord_state(self.family, self.weights)

    def to_json(self):
        return {"weights": self.weights.tolist(), "state": self.state.to_json()}


def make_zero_discord_state(family: StationaryFamily, weights) -> JointDistribution:
    """State whose row ``j`` is ``sum_k weights[j, k] * m_k``.

    ``weights`` is a ``d_A x R`` nonnegative matrix summing to one.
    """
    q = np.asarray(weights, dtype=float)
    if q.ndim != 2 or q.shape[1] != family.R:
        raise InvalidWeights(f"weights must have shape (d_A, {family.R}), got {q.shape}")
    if not np.all(np.isfinite(q)) or q.min() < -1e-12 or abs(q.sum() - 1.0) > 1e-9:
        raise InvalidWeights("weights must be nonnegative and sum to 1")
    return JointDistribution(np.clip(q, 0.0, None) @ family.vectors)


def random_zero_discord_state(family: StationaryFamily, d_a: int, rng=None) -> ZeroDiscordState:
    """Zero-discord state with weights drawn uniformly from the simplex."""
    rng = np.random.default_rng(rng)
    q = rng.dirichlet(np.ones(d_a * family.R)).reshape(d_a, family.R)
    return ZeroDiscordState(q, family)


def fixed_point_system(p: JointDistribution):
    """``(A, b)`` with ``A @ vec(M) == b`` iff ``p @ M.T == p``.

    Derived from ``vec(M @ p.T) == kron(p, I) @ vec(M)``.
    """
    d_b = p.dims[1]
    return kron(p.probs, np.eye(d_b)), vec(p.probs.T)


def stochasticity_system(d: int):
    """``(A, b)`` with ``A @ vec(M) == b`` iff every column of ``M`` sums to one."""
    return kron(np.eye(d), np.ones((1, d))), np.ones(d)


@dataclass(frozen=True, eq=False)
class ChannelPolytope:
    """All column-stochastic ``M`` leaving a fixed state invariant under B-readout.

    The polytope is never empty: the identity channel always belongs to it.
    ``sample_point`` minimizes the trace, so it differs from the identity
    whenever any other member exists.
    """

    state: JointDistribution
    equality_matrix: np.ndarray
    equality_rhs: np.ndarray
    stochasticity_matrix: np.ndarray
    stochasticity_rhs: np.ndarray
    sample_point: StochasticChannel
    min_trace: float
    _vertices: list = field(default=None, repr=False)

    @property
    def state_dim(self):
        return self.state.dims[1]

    @property
    def is_singleton(self):
        """True when the identity is the only zero-discord channel."""
        return self.min_trace >= self.state_dim - 1e-9

    def system(self):
        A = np.vstack([self.equality_matrix, self.stochasticity_matrix])
        b = np.concatenate([self.equality_rhs, self.stochasticity_rhs])
        return A, b

    def contains(self, m: StochasticChannel, tol=1e-9):
        if m.dim != self.state_dim:
            return False
        A, b = self.system()
        return bool(np.max(np.abs(A @ vec(m.matrix) - b)) <= tol and m.matrix.min() >= -tol)

    def optimize(self, objective) -> StochasticChannel:
        """Member minimizing ``sum(objective * M)`` for a ``d x d`` cost matrix."""
        return _solve_channel_lp(self.state, vec(np.asarray(objective, float)), *self.system())[0]

    def vertices(self, tol=1e-9):
        """All vertices, by enumerating bases. Only offered for ``d <= 3``."""
        d = self.state_dim
        if d > 3:
            raise DimensionTooLarge(f"vertex enumeration limited to d <= 3, got d = {d}")
        if self._vertices is None:
            object.__setattr__(self, "_vertices", _enumerate_vertices(*self.system(), d, tol))
        return list(self._vertices)

    def to_json(self):
        return {
            "state_dim": self.state_dim,
            "equality_matrix": self.equality_matrix.tolist(),
            "equality_rhs": self.equality_rhs.tolist(),
            "stochasticity_matrix": self.stochasticity_matrix.tolist(),
            "stochasticity_rhs": self.stochasticity_rhs.tolist(),
            "sample_channel": self.sample_point.to_json(),
            "min_trace": self.min_trace,
            "identity_only": self.is_singleton,
        }


def _solve_channel_lp(p, cost, A, b):
    d = p.dims[1]
    res = solve_lp(cost, A_eq=A, b_eq=b)
    if not res.success:
        raise NumericalFailure(f"channel LP reported {res.status}; identity should be feasible")
    M = _renormalize(res.x.reshape((d, d), order="F"))
    ch = StochasticChannel(M)
    if not is_zero_discord(p, ch, tol=1e-9):
        raise NumericalFailure("LP solution violates the fixed-point condition")
    return ch, res.fun


def zero_discord_channels(p: JointDistribution) -> ChannelPolytope:
    """Describe every channel on B under which ``p`` has zero discord.

    Raises
    ------
    NumericalFailure
        If the simplex solver hits its pivot guard or returns an invalid point.
    """
    d = p.dims[1]
    A_fix, b_fix = fixed_point_system(p)
    A_col, b_col = stochasticity_system(d)
    A = np.vstack([A_fix, A_col])
    b = np.concatenate([b_fix, b_col])
    sample, min_trace = _solve_channel_lp(p, vec(np.eye(d)), A, b)
    if min_trace >= d - 1e-9:
        sample = identity_channel(d)
    return ChannelPolytope(p, A_fix, b_fix, A_col, b_col, sample, float(min_trace))


def _independent_rows(A, tol=1e-10):
    if A.size == 0:
        return np.arange(0)
    _, R, piv = scipy.linalg.qr(A.T, pivoting=True, mode="economic")
    diag = np.abs(np.diag(R))
    rank = int(np.sum(diag > tol * max(1.0, diag.max())))
    return np.sort(piv[:rank])


def _enumerate_vertices(A, b, d, tol):
    rows = _independent_rows(A)
    A, b = A[rows], b[rows]
    r, n = A.shape
    found = []
    for cols in itertools.combinations(range(n), r):
        B = A[:, cols]
        if np.linalg.matrix_rank(B) < r:
            continue
        xb = np.linalg.solve(B, b)
        if xb.min() < -tol:
            continue
        x = np.zeros(n)
        x[list(cols)] = np.clip(xb, 0.0, None)
        if np.max(np.abs(A @ x - b)) > tol:
            continue
        if not any(np.max(np.abs(x - y)) <= 1e-8 for y in found):
            found.append(x)
    return [StochasticChannel(_renormalize(x.reshape((d, d), order="F"))) for x in found]

