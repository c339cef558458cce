"""Classical discord of a joint state under a noisy readout of B."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .channels import StochasticChannel, apply_to_b
from .distributions import DEFAULT_TOL, JointDistribution, mutual_information


@dataclass(frozen=True)
class DiscordReport:
    mutual_information_I: float
    measured_J: float
    discord: float
    is_zero: bool

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, obj):
        return cls(**obj)


def measured_mutual_information(p: JointDistribution, m: StochasticChannel) -> float:
    """Mutual information of ``p`` after B is read out through ``m``."""
    return mutual_information(apply_to_b(p, m))


def classical_discord(p: JointDistribution, m: StochasticChannel, tol=DEFAULT_TOL) -> DiscordReport:
    """Discord A→B: the mutual information lost by reading B through ``m``.

    ``is_zero`` uses the fixed-point test of :func:`is_zero_discord`, not the
    entropy difference.

    Examples
    --------
    >>> from cdiscord import new_joint, binary_symmetric
    >>> r = classical_discord(new_joint([[0.5, 0], [0, 0.5]]), binary_symmetric(0.1))
    >>> round(r.discord, 10)
    0.4689955936
    """
    noisy = apply_to_b(p, m)
    i_ab = mutual_information(p)
    j_ab = mutual_information(noisy)
    zero = bool(np.max(np.abs(noisy.probs - p.probs)) <= tol)
    return DiscordReport(i_ab, j_ab, i_ab - j_ab, zero)


def discord_value(p: JointDistribution, m: StochasticChannel) -> float:
    """Just the discord number; cheaper than building a report."""
    return mutual_information(p) - mutual_information(apply_to_b(p, m))


def is_zero_discord(p: JointDistribution, m: StochasticChannel, tol=DEFAULT_TOL) -> bool:
    """True iff reading B through ``m`` leaves ``p`` unchanged (max-norm ``tol``).

    A fixed point always has zero discord. The converse needs correlation:
    a product state has ``I = J = 0`` whatever its B marginal, so its
    discord vanishes even when this test returns False.
    """
    noisy = apply_to_b(p, m)
    return bool(np.max(np.abs(noisy.probs - p.probs)) <= tol)
