"""Two-point tripartite purification and the discord / conditional-entropy identity.

For the state ``(1 - q) at (a, b, c) + q at (not a, not b, not c)`` with B and
C read out through the same channel ``M``::

    D_{A->C}(p_AC) = H(C) - H(A,C) + H(A,C') - H(C')
                   = H(A|C')              since H(C) = H(A,C) = h2(q)
                   = H(A|B')              by the B <-> C symmetry

There is no entanglement-of-formation term classically, so nothing here can
turn negative.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .channels import StochasticChannel, apply_to_b
from .discord import classical_discord
from .distributions import (
    JointDistribution,
    TripartiteDistribution,
    binary_entropy,
    conditional_entropy_a_given_b,
    joint_entropy,
    marginal_b,
    shannon_entropy,
)
from .errors import DimensionMismatch, OutOfRange

_AXES = {"A": 0, "B": 1, "C": 2}


@dataclass(frozen=True, eq=False)
class PurifiedTriple:
    base_bits: tuple
    mixing_q: float
    distribution: TripartiteDistribution

    def conditional_entropies(self):
        """``(H(A|BC), H(B|CA), H(C|AB))``; all zero for a purified triple."""
        t = self.distribution.probs
        h_all = joint_entropy(t)
        return tuple(
            max(h_all - joint_entropy(t.sum(axis=ax)), 0.0) for ax in range(3)
        )


def purify(a: int, b: int, c: int, q: float) -> PurifiedTriple:
    """Mass ``1 - q`` at ``(a, b, c)`` and ``q`` at the bitwise complement."""
    if not 0.0 <= q <= 1.0:
        raise OutOfRange(f"q = {q} outside [0, 1]")
    bits = tuple(int(x) for x in (a, b, c))
    if any(x not in (0, 1) for x in bits):
        raise OutOfRange(f"base bits must be 0 or 1, got {bits}")
    t = np.zeros((2, 2, 2))
    t[bits] += 1.0 - q
    t[tuple(1 - x for x in bits)] += q
    return PurifiedTriple(bits, float(q), TripartiteDistribution(t))


def pair_marginal(t: TripartiteDistribution, axes=("A", "C")) -> JointDistribution:
    """Marginal on two parties; the first listed party indexes rows."""
    i, j = (_AXES[x] if isinstance(x, str) else int(x) for x in axes)
    if i == j:
        raise ValueError("pair_marginal needs two distinct axes")
    probs = t.probs if isinstance(t, TripartiteDistribution) else t.distribution.probs
    (k,) = {0, 1, 2} - {i, j}
    m = probs.sum(axis=k)
    # remaining axes are in increasing order; transpose if caller asked otherwise
    return JointDistribution(m if i < j else m.T)


@dataclass(frozen=True)
class MergingReport:
    q: float
    lhs_discord_AC: float
    mid_H_A_given_Cprime: float
    rhs_H_A_given_Bprime: float
    max_discrepancy: float
    H_C: float
    H_AC: float
    expanded_discord_AC: float

    def to_json(self):
        return asdict(self)


def _check_channel(m: StochasticChannel):
    if m.dim != 2:
        raise DimensionMismatch(f"merging identity needs a one-bit channel, got dim {m.dim}")


def _merging_terms(q, m_b, m_c, bits):
    triple = purify(*bits, q)
    p_ac = pair_marginal(triple.distribution, ("A", "C"))
    p_ab = pair_marginal(triple.distribution, ("A", "B"))
    noisy_ac = apply_to_b(p_ac, m_c)
    noisy_ab = apply_to_b(p_ab, m_b)
    h_c = shannon_entropy(marginal_b(p_ac))
    h_ac = joint_entropy(p_ac)
    expanded = h_c - h_ac + joint_entropy(noisy_ac) - shannon_entropy(marginal_b(noisy_ac))
    return dict(
        lhs=classical_discord(p_ac, m_c).discord,
        mid=conditional_entropy_a_given_b(noisy_ac),
        rhs=conditional_entropy_a_given_b(noisy_ab),
        H_C=h_c,
        H_AC=h_ac,
        expanded=expanded,
    )


def verify_merging_identity(q: float, m: StochasticChannel, bits=(0, 0, 0)) -> MergingReport:
    """Evaluate every link of the discord / conditional-entropy chain.

    The same channel ``m`` reads out both B and C. ``max_discrepancy`` is the
    largest pairwise gap between the three headline quantities; the B/C
    symmetry that makes the last link hold needs ``b == c`` in ``bits``.
    """
    _check_channel(m)
    t = _merging_terms(q, m, m, bits)
    vals = (t["lhs"], t["mid"], t["rhs"])
    gap = max(abs(x - y) for x in vals for y in vals)
    return MergingReport(
        float(q), t["lhs"], t["mid"], t["rhs"], gap, t["H_C"], t["H_AC"], t["expanded"]
    )


def verify_merging_identity_general(q, m_b: StochasticChannel, m_c: StochasticChannel, bits=(0, 0, 0)):
    """Variant with separate readout channels for B and C.

    Only ``D_{A->C} == H(A|C')`` is expected to hold here; the returned
    ``max_discrepancy`` covers that pair alone.
    """
    _check_channel(m_b)
    _check_channel(m_c)
    t = _merging_terms(q, m_b, m_c, bits)
    return MergingReport(
        float(q), t["lhs"], t["mid"], t["rhs"], abs(t["lhs"] - t["mid"]),
        t["H_C"], t["H_AC"], t["expanded"],
    )
