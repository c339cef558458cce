"""Noisy readout channels and their action on one party of a joint state.

Channels are column-stochastic: ``M[i, j]`` is the probability of reading
``i`` when the true value is ``j``, so every column sums to one. Composition
``M2 @ M1`` means "apply ``M1`` first".
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import JointDistribution, TripartiteDistribution
from .errors import ColumnNotNormalized, DimensionMismatch, NegativeEntry, NotSquare, OutOfRange

COLUMN_TOL = 1e-12
_AXES = {"A": 0, "B": 1, "C": 2}


@dataclass(frozen=True, eq=False)
class StochasticChannel:
    """A square column-stochastic matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.size == 0:
            raise NotSquare(f"channel matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise NegativeEntry("channel matrix has non-finite entries")
        if m.min() < -COLUMN_TOL:
            raise NegativeEntry(f"channel entry {m.min():.3g} is negative")
        m = np.clip(m, 0.0, None)
        sums = m.sum(axis=0)
        bad = np.abs(sums - 1.0) > COLUMN_TOL
        if np.any(bad):
            j = int(np.argmax(bad))
            raise ColumnNotNormalized(f"column {j} sums to {sums[j]!r}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def then(self, other: StochasticChannel) -> StochasticChannel:
        """Channel that applies ``self`` and then ``other``."""
        if other.dim != self.dim:
            raise DimensionMismatch(f"cannot compose dims {self.dim} and {other.dim}")
        return StochasticChannel(_renormalize(other.matrix @ self.matrix))

    def to_json(self):
        return {"dim": self.dim, "matrix": self.matrix.tolist()}

    @classmethod
    def from_json(cls, obj):
        ch = cls(obj["matrix"])
        if "dim" in obj and int(obj["dim"]) != ch.dim:
            raise NotSquare(f"dim {obj['dim']} does not match matrix of size {ch.dim}")
        return ch

    def __repr__(self):
        return f"StochasticChannel({self.matrix.tolist()})"


def _renormalize(m):
    # products of stochastic matrices drift from exact column sums by ~1 ulp
    m = np.clip(m, 0.0, None)
    return m / m.sum(axis=0, keepdims=True)


def new_channel(matrix) -> StochasticChannel:
    """Validate ``matrix`` as a column-stochastic channel.

    Raises
    ------
    NotSquare, NegativeEntry, ColumnNotNormalized
    """
    return StochasticChannel(matrix)


def identity_channel(d: int) -> StochasticChannel:
    """Noiseless readout."""
    return StochasticChannel(np.eye(d))


def uniform_channel(d: int) -> StochasticChannel:
    """Maximally noisy readout: every outcome has probability ``1/d``."""
    return StochasticChannel(np.full((d, d), 1.0 / d))


def binary_symmetric(eps: float) -> StochasticChannel:
    """One-bit channel flipping the value with probability ``eps``."""
    if not 0.0 <= eps <= 1.0:
        raise OutOfRange(f"flip probability {eps} outside [0, 1]")
    return StochasticChannel([[1.0 - eps, eps], [eps, 1.0 - eps]])


def tensor_channel(m1: StochasticChannel, m2: StochasticChannel) -> StochasticChannel:
    """Independent noise on two registers, ``m1 ⊗ m2``."""
    return StochasticChannel(_renormalize(np.kron(m1.matrix, m2.matrix)))


def block_channel(*channels: StochasticChannel) -> StochasticChannel:
    """Direct sum of channels acting on disjoint blocks of the alphabet."""
    d = sum(c.dim for c in channels)
    out = np.zeros((d, d))
    k = 0
    for c in channels:
        out[k:k + c.dim, k:k + c.dim] = c.matrix
        k += c.dim
    return StochasticChannel(out)


def apply_to_b(p: JointDistribution, m: StochasticChannel) -> JointDistribution:
    """Noisy state ``p_AB' = p_AB @ M.T``.

    Entry ``(i, j')`` is ``sum_j p(i, j) M(j', j)``. The A-marginal is
    untouched.
    """
    if m.dim != p.dims[1]:
        raise DimensionMismatch(f"channel dim {m.dim} != d_B = {p.dims[1]}")
    return JointDistribution(p.probs @ m.matrix.T)


def apply_to_a(p: JointDistribution, m: StochasticChannel) -> JointDistribution:
    if m.dim != p.dims[0]:
        raise DimensionMismatch(f"channel dim {m.dim} != d_A = {p.dims[0]}")
    return JointDistribution(m.matrix @ p.probs)


def apply_to_axis(t: TripartiteDistribution, m: StochasticChannel, axis="C") -> TripartiteDistribution:
    """Pass one party (``"A"``, ``"B"`` or ``"C"``) of ``t`` through ``m``."""
    ax = _AXES[axis] if isinstance(axis, str) else int(axis)
    if m.dim != t.dims[ax]:
        raise DimensionMismatch(f"channel dim {m.dim} != dim {t.dims[ax]} of axis {axis}")
    out = np.tensordot(m.matrix, t.probs, axes=([1], [ax]))
    return TripartiteDistribution(np.moveaxis(out, 0, ax))
