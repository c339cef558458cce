"""
States that a noisy readout leaves untouched
============================================

For a fixed channel the zero-discord states are the joint distributions
whose rows are mixtures of the channel's stationary vectors.
"""

import numpy as np

from cdiscord import (
    binary_symmetric,
    block_channel,
    classical_discord,
    make_zero_discord_state,
    random_zero_discord_state,
    stationary_family,
)

# A block channel has two closed classes and so two stationary vectors.
m = block_channel(binary_symmetric(0.1), binary_symmetric(0.2))
family = stationary_family(m)
print("R =", family.R)
print(family.vectors)

###############################################################################
# Any nonnegative weight matrix summing to one gives a zero-discord state.

q = np.array([[0.3, 0.1], [0.2, 0.4]])
p = make_zero_discord_state(family, q)
print(p.probs)
print("discord:", classical_discord(p, m).discord)

###############################################################################
# Random members of the family, all with vanishing discord.

rng = np.random.default_rng(1)
worst = max(classical_discord(random_zero_discord_state(family, 3, rng).state, m).discord for _ in range(200))
print("largest discord over 200 samples:", worst)

###############################################################################
# A generic state is not in the family. Under BSC(0.1) the fraction of
# uniformly drawn 2x2 states below a threshold shrinks with the threshold,
# but never reaches zero for any fixed positive cut.

from cdiscord import JointDistribution

bsc = binary_symmetric(0.1)
vals = np.array([classical_discord(JointDistribution(rng.dirichlet(np.ones(4)).reshape(2, 2)), bsc).discord
                 for _ in range(20000)])
for t in (1e-2, 1e-4, 1e-6):
    print(f"fraction with D < {t:g}: {np.mean(vals < t):.5f}")
