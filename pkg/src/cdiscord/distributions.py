"""Finite joint distributions and Shannon information measures.

All entropies are in bits, with the convention ``0 log 0 = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDistribution, NegativeEntry, NotNormalized, OutOfRange

#: Largest allowed deviation of the total mass from one on input.
NORM_TOL = 1e-9
#: Negative entries above this are treated as round-off and clipped to zero.
NEG_TOL = 1e-12
#: Default tolerance for comparisons.
DEFAULT_TOL = 1e-9


def _validated(array, ndim=None):
    a = np.array(array, dtype=float)
    if ndim is not None and a.ndim != ndim:
        raise InvalidDistribution(f"expected a rank-{ndim} array, got shape {a.shape}")
    if a.size == 0:
        raise InvalidDistribution("distribution has no entries")
    if not np.all(np.isfinite(a)):
        raise InvalidDistribution("distribution has non-finite entries")
    if a.min() < -NEG_TOL:
        raise NegativeEntry(f"entry {a.min():.3g} is negative")
    a = np.clip(a, 0.0, None)
    total = a.sum()
    if abs(total - 1.0) > NORM_TOL:
        raise NotNormalized(f"entries sum to {total!r}, not 1")
    a = a / total
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Joint distribution ``p(i, j)`` of Alice's value ``i`` and Bob's ``j``.

    Rows index A, columns index B. Build instances with :func:`new_joint`
    (or the constructor, which validates the same way).
    """

    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _validated(self.probs, ndim=2))

    @property
    def dims(self):
        return self.probs.shape

    def transpose(self):
        """The same state with the roles of A and B swapped."""
        return JointDistribution(self.probs.T)

    def allclose(self, other, tol=DEFAULT_TOL):
        return self.dims == other.dims and np.max(np.abs(self.probs - other.probs)) <= tol

    def to_json(self):
        return {"dims": list(self.dims), "probs": self.probs.tolist()}

    @classmethod
    def from_json(cls, obj):
        p = cls(obj["probs"])
        if "dims" in obj and tuple(obj["dims"]) != p.dims:
            raise InvalidDistribution(f"dims {obj['dims']} do not match probs shape {p.dims}")
        return p

    def __repr__(self):
        return f"JointDistribution(dims={self.dims}, probs={self.probs.tolist()})"


@dataclass(frozen=True, eq=False)
class TripartiteDistribution:
    """Joint distribution ``p(i, j, k)`` over parties A, B, C."""

    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _validated(self.probs, ndim=3))

    @property
    def dims(self):
        return self.probs.shape

    def to_json(self):
        return {"dims": list(self.dims), "probs": self.probs.tolist()}

    @classmethod
    def from_json(cls, obj):
        t = cls(obj["probs"])
        if "dims" in obj and tuple(obj["dims"]) != t.dims:
            raise InvalidDistribution(f"dims {obj['dims']} do not match probs shape {t.dims}")
        return t


def new_joint(matrix) -> JointDistribution:
    """Validate ``matrix`` as a bipartite distribution.

    Entries slightly below zero (above ``-1e-12``) are clipped, and the total
    mass is renormalized when it is within ``1e-9`` of one.

    Raises
    ------
    NegativeEntry
        Some entry is below ``-1e-12``.
    NotNormalized
        The entries do not sum to one within ``1e-9``.
    """
    return JointDistribution(matrix)


def _as_dist(p):
    return p.probs if isinstance(p, (JointDistribution, TripartiteDistribution)) else np.asarray(p, float)


def marginal_a(p: JointDistribution) -> np.ndarray:
    """Row sums: the distribution of Alice's value."""
    return _as_dist(p).sum(axis=1)


def marginal_b(p: JointDistribution) -> np.ndarray:
    """Column sums: the distribution of Bob's value."""
    return _as_dist(p).sum(axis=0)


def _entropy(a):
    a = np.asarray(a, dtype=float).ravel()
    nz = a[a > 0]
    return float(max(-np.sum(nz * np.log2(nz)), 0.0))


def shannon_entropy(v) -> float:
    """Shannon entropy in bits of a probability vector.

    Raises
    ------
    InvalidDistribution
        If ``v`` has negative entries or does not sum to one within ``1e-9``.
    """
    v = np.asarray(v, dtype=float).ravel()
    if v.size == 0 or not np.all(np.isfinite(v)) or v.min() < -NEG_TOL:
        raise InvalidDistribution("not a probability vector")
    if abs(v.sum() - 1.0) > NORM_TOL:
        raise InvalidDistribution(f"vector sums to {v.sum()!r}, not 1")
    return _entropy(v)


def binary_entropy(q: float) -> float:
    """h2(q) in bits."""
    if not 0.0 <= q <= 1.0:
        raise OutOfRange(f"q = {q} outside [0, 1]")
    if q in (0.0, 1.0):
        return 0.0
    return float(-q * np.log2(q) - (1.0 - q) * np.log2(1.0 - q))


def joint_entropy(p) -> float:
    """H(A, B), the entropy of the flattened joint table."""
    return _entropy(_as_dist(p))


def conditional_entropy_a_given_b(p) -> float:
    """H(A|B) = H(A, B) - H(B)."""
    probs = _as_dist(p)
    return max(_entropy(probs) - _entropy(probs.sum(axis=0)), 0.0)


def conditional_entropy_b_given_a(p) -> float:
    """H(B|A) = H(A, B) - H(A)."""
    probs = _as_dist(p)
    return max(_entropy(probs) - _entropy(probs.sum(axis=1)), 0.0)


def mutual_information(p) -> float:
    """I(A;B) = H(A) + H(B) - H(A, B), clipped at zero."""
    probs = _as_dist(p)
    value = _entropy(probs.sum(axis=1)) + _entropy(probs.sum(axis=0)) - _entropy(probs)
    return max(value, 0.0)


def is_conditionally_pure(p: JointDistribution, tol=DEFAULT_TOL):
    """Test whether Bob's value determines Alice's and vice versa.

    The check is structural: every row and every column of ``p`` may hold at
    most one entry above ``tol``. Equivalently H(A|B) = H(B|A) = 0, and the
    support is the graph of a bijection ``f`` between the values that occur.

    Returns
    -------
    pure : bool
    f : dict or None
        ``{i: f(i)}`` over the rows in the support when ``pure`` is true.
    """
    support = _as_dist(p) > tol
    if np.any(support.sum(axis=1) > 1) or np.any(support.sum(axis=0) > 1):
        return False, None
    rows, cols = np.nonzero(support)
    return True, {int(i): int(j) for i, j in zip(rows, cols)}
