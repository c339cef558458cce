"""Minimum discord over a constrained family of readout channels.

Without a constraint that excludes noiseless readout the minimum is always
zero (the identity channel leaves every state unchanged), so the family is an
explicit argument.

Since ``I(p @ M.T)`` is convex in ``M``, discord is concave in ``M`` and its
minimum over a polytope is attained at a vertex. The local search therefore
always starts from family extreme points in addition to random interior ones.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .channels import (
    StochasticChannel,
    _renormalize,
    apply_to_b,
    binary_symmetric,
    identity_channel,
    tensor_channel,
)
from .distributions import (
    JointDistribution,
    binary_entropy,
    conditional_entropy_a_given_b,
    mutual_information,
)
from .errors import DimensionMismatch, DimensionTooLarge, EmptyFamily, NumericalFailure

MIN_STARTS = 8
CERTIFY_TOL = 1e-6


def project_simplex(x, total=1.0):
    """Euclidean projection of each column of ``x`` onto ``{z >= 0, sum(z) = total}``."""
    x = np.atleast_2d(np.asarray(x, float))
    d = x.shape[0]
    if total <= 0:
        return np.zeros_like(x)
    u = -np.sort(-x, axis=0)
    css = np.cumsum(u, axis=0) - total
    k = np.arange(1, d + 1)[:, None]
    cond = u - css / k > 0
    rho = d - 1 - np.argmax(cond[::-1], axis=0)
    theta = css[rho, np.arange(x.shape[1])] / (rho + 1)
    return np.clip(x - theta, 0.0, None)


@dataclass(frozen=True)
class EntrywiseLowerBound:
    """All ``d x d`` column-stochastic matrices with every entry ``>= epsilon``."""

    epsilon: float
    dim: int = 2
    kind = "entrywise_lower_bound"

    def validate(self):
        if not 0.0 <= self.epsilon <= 1.0 / self.dim + 1e-15:
            raise EmptyFamily(f"entrywise bound {self.epsilon} exceeds 1/d = {1 / self.dim}")

    def project(self, params):
        d, eps = self.dim, self.epsilon
        x = np.asarray(params, float).reshape(d, d)
        m = eps + project_simplex(x - eps, 1.0 - d * eps)
        return StochasticChannel(_renormalize(m))

    def contains(self, m, tol=1e-9):
        return m.dim == self.dim and m.matrix.min() >= self.epsilon - tol

    def extreme_points(self):
        d, eps = self.dim, self.epsilon
        for rows in itertools.product(range(d), repeat=d):
            m = np.full((d, d), eps)
            m[list(rows), range(d)] += 1.0 - d * eps
            yield m.ravel()

    def random_point(self, rng):
        d, eps = self.dim, self.epsilon
        return (eps + (1.0 - d * eps) * rng.dirichlet(np.ones(d), size=d).T).ravel()

    def grid(self, step):
        if self.dim != 2:
            raise DimensionTooLarge("the entrywise-bound grid is only available for d = 2")
        vals = _linspace(self.epsilon, 1.0 - self.epsilon, step)
        a, b = np.meshgrid(vals, vals, indexing="ij")
        a, b = a.ravel(), b.ravel()
        mats = np.stack([np.stack([a, b], -1), np.stack([1 - a, 1 - b], -1)], 1)
        return mats, step / 2.0

    def to_json(self):
        return {"kind": self.kind, "epsilon": self.epsilon, "dim": self.dim}


@dataclass(frozen=True)
class ParametricBSC:
    """Independent bit flips with a common probability in ``[eps_min, eps_max]``.

    For ``dim = 2**n`` the channel is the n-fold tensor power of the one-bit
    binary symmetric channel.
    """

    eps_min: float
    eps_max: float
    dim: int = 2
    kind = "parametric_bsc"

    @property
    def n_bits(self):
        return int(round(np.log2(self.dim)))

    def validate(self):
        if self.dim < 2 or 2 ** self.n_bits != self.dim:
            raise EmptyFamily(f"binary symmetric family needs dim = 2**n, got {self.dim}")
        if not 0.0 <= self.eps_min <= self.eps_max <= 0.5:
            raise EmptyFamily(f"need 0 <= eps_min <= eps_max <= 1/2, got [{self.eps_min}, {self.eps_max}]")

    def channel(self, eps):
        one = binary_symmetric(float(eps))
        m = one
        for _ in range(self.n_bits - 1):
            m = tensor_channel(m, one)
        return m

    def project(self, params):
        eps = float(np.clip(np.ravel(params)[0], self.eps_min, self.eps_max))
        return self.channel(eps)

    def contains(self, m, tol=1e-9):
        if m.dim != self.dim:
            return False
        eps = m.matrix[1, 0] if self.dim == 2 else 1.0 - m.matrix[0, 0] ** (1.0 / self.n_bits)
        if not self.eps_min - tol <= eps <= self.eps_max + tol:
            return False
        return np.max(np.abs(self.channel(np.clip(eps, 0, 0.5)).matrix - m.matrix)) <= tol

    def extreme_points(self):
        yield np.array([self.eps_min])
        yield np.array([self.eps_max])

    def random_point(self, rng):
        return np.array([rng.uniform(self.eps_min, self.eps_max)])

    def grid(self, step):
        eps = _linspace(self.eps_min, self.eps_max, step)
        mats = np.array([self.channel(e).matrix for e in eps])
        return mats, self.n_bits * step / 2.0

    def to_json(self):
        return {"kind": self.kind, "eps_min": self.eps_min, "eps_max": self.eps_max, "dim": self.dim}


@dataclass(frozen=True)
class ExplicitSet:
    channels: tuple
    kind = "explicit_set"

    @property
    def dim(self):
        return self.channels[0].dim if self.channels else 0

    def validate(self):
        if not self.channels:
            raise EmptyFamily("explicit channel set is empty")
        if any(c.dim != self.dim for c in self.channels):
            raise EmptyFamily("explicit channel set mixes dimensions")

    def contains(self, m, tol=1e-9):
        return any(c.dim == m.dim and np.max(np.abs(c.matrix - m.matrix)) <= tol for c in self.channels)

    def grid(self, step=None):
        return np.array([c.matrix for c in self.channels]), 0.0

    def to_json(self):
        return {"kind": self.kind, "channels": [c.to_json() for c in self.channels]}


def family_from_json(obj, dim=None):
    kind = obj["kind"]
    if kind == "entrywise_lower_bound":
        return EntrywiseLowerBound(float(obj["epsilon"]), int(obj.get("dim", dim or 2)))
    if kind == "parametric_bsc":
        return ParametricBSC(float(obj["eps_min"]), float(obj["eps_max"]), int(obj.get("dim", dim or 2)))
    if kind == "explicit_set":
        return ExplicitSet(tuple(StochasticChannel.from_json(c) for c in obj["channels"]))
    raise EmptyFamily(f"unknown channel family kind {kind!r}")


@dataclass(frozen=True, eq=False)
class MinimizationResult:
    min_discord: float
    argmin_channel: StochasticChannel
    iterations: int
    certified: bool
    budget_exhausted: bool = False
    oracle_value: float | None = None
    slack: float | None = None

    def to_json(self):
        return {
            "min_discord": self.min_discord,
            "argmin_channel": self.argmin_channel.to_json(),
            "iterations": self.iterations,
            "certified": self.certified,
            "budget_exhausted": self.budget_exhausted,
            "oracle_value": self.oracle_value,
            "slack": self.slack,
        }


def _linspace(lo, hi, step):
    n = int(np.ceil((hi - lo) / step - 1e-9)) + 1
    return np.linspace(lo, hi, max(n, 1))


def _batch_entropy(p, axes):
    logs = np.log2(np.where(p > 0, p, 1.0))
    return -np.sum(p * logs, axis=axes)


def batch_discord(p: JointDistribution, mats) -> np.ndarray:
    """Discord of ``p`` under each channel in the stack ``mats`` (shape ``(G, d, d)``)."""
    noisy = np.einsum("ij,gkj->gik", p.probs, mats)
    h_a = _batch_entropy(p.probs.sum(axis=1), -1)
    j = h_a + _batch_entropy(noisy.sum(axis=1), -1) - _batch_entropy(noisy, (-2, -1))
    return mutual_information(p) - j


def grid_slack(t, d_a, d_b):
    """Bound on how far the grid minimum can exceed the true minimum.

    ``t`` bounds the total-variation distance between the noisy states of a
    channel and its nearest grid neighbour. By the continuity bound
    ``|H(x) - H(y)| <= t log2(N) + h2(t)`` applied to H(B') and H(A, B').
    """
    if t == 0:
        return 0.0
    h = binary_entropy(min(t, 0.5))
    return t * np.log2(d_b) + t * np.log2(d_a * d_b) + 2.0 * h


def _check(p, family):
    family.validate()
    if family.dim != p.dims[1]:
        raise DimensionMismatch(f"family dim {family.dim} != d_B = {p.dims[1]}")


def grid_oracle(p: JointDistribution, family, step=1e-3) -> MinimizationResult:
    """Exhaustive minimum over a discretization of ``family``.

    The grid includes the family's endpoints (and for the entrywise family the
    corners), so it never misses an optimum sitting on a vertex. The
    documented ``slack`` (see :func:`grid_slack`) bounds the gap to the true
    minimum elsewhere.

    Raises
    ------
    DimensionTooLarge
        For the entrywise-bound family with ``d != 2``.
    """
    _check(p, family)
    if step <= 0:
        raise ValueError("grid step must be positive")
    mats, tv = family.grid(step)
    values = batch_discord(p, mats)
    k = int(np.argmin(values))
    slack = float(grid_slack(tv, *p.dims))
    return MinimizationResult(float(values[k]), StochasticChannel(mats[k]), len(mats), True,
                              oracle_value=float(values[k]), slack=slack)


def _local_search(f, x0, budget):
    x0 = np.asarray(x0, float)
    res = minimize(f, x0, method="Nelder-Mead",
                   options={"maxiter": budget, "xatol": 1e-10, "fatol": 1e-13})
    return res.x, res.fun, res.nit, res.status != 0


def stochastic_discord(p: JointDistribution, family, budget=500, seed=0, n_starts=MIN_STARTS,
                       certify=True, certify_step=1e-3) -> MinimizationResult:
    """Minimum classical discord of ``p`` over the channels in ``family``.

    Runs projected Nelder-Mead from the family's extreme points and from
    random interior points (at least ``n_starts`` starts in total). Each start
    draws from its own child of ``seed``, so results are reproducible.

    When ``certify`` is true and a grid oracle exists for the family, the
    result is marked ``certified`` if it is within ``1e-6`` of the oracle.
    ``budget_exhausted`` flags a start that stopped on its iteration budget;
    such a result is returned with its best value but never certified.

    Raises
    ------
    EmptyFamily, DimensionMismatch, NumericalFailure
    """
    _check(p, family)
    if budget < 1:
        raise ValueError("budget must be at least 1")
    base = mutual_information(p)

    def discord_of(m):
        return base - mutual_information(apply_to_b(p, m))

    iterations = 0
    exhausted = False
    if isinstance(family, ExplicitSet):
        values = [discord_of(c) for c in family.channels]
        k = int(np.argmin(values))
        best_val, best_m = values[k], family.channels[k]
        iterations = len(values)
    else:
        starts = list(itertools.islice(family.extreme_points(), 64))
        rngs = [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(n_starts)]
        starts += [family.random_point(r) for r in rngs]
        best_val, best_m = np.inf, None
        for x0 in starts:
            x, _, nit, hit_budget = _local_search(lambda x: discord_of(family.project(x)), x0, budget)
            iterations += nit
            exhausted |= hit_budget
            m = family.project(x)
            val = discord_of(m)
            if val < best_val:
                best_val, best_m = val, m

    noisy = apply_to_b(p, best_m)
    alt = conditional_entropy_a_given_b(noisy) - conditional_entropy_a_given_b(p)
    if abs(alt - best_val) > 1e-10:
        raise NumericalFailure(f"H(A|B') - H(A|B) = {alt!r} disagrees with I - J = {best_val!r}")

    certified, oracle, slack = False, None, None
    if certify:
        try:
            o = grid_oracle(p, family, certify_step)
        except DimensionTooLarge:
            o = None
        if o is not None:
            oracle, slack = o.min_discord, o.slack
            certified = bool(best_val <= oracle + CERTIFY_TOL) and not exhausted
    return MinimizationResult(float(best_val), best_m, iterations, certified, exhausted, oracle, slack)


def family_contains_identity(family) -> bool:
    return family.contains(identity_channel(family.dim))
