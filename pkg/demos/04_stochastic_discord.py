"""
Minimizing discord over a family of channels
============================================

If the readout channel is only known to lie in some family, the discord of
interest is its minimum over that family. Any family that admits a perfect
readout gives zero, so the interesting families bound the noise from below.
"""

from cdiscord import (
    EntrywiseLowerBound,
    ParametricBSC,
    grid_oracle,
    new_joint,
    stochastic_discord,
)

p = new_joint([[0.5, 0.0], [0.0, 0.5]])

# Flip probability in [0.1, 0.5]: the least noisy channel wins.
fam = ParametricBSC(0.1, 0.5)
res = stochastic_discord(p, fam, seed=0)
print(f"min D = {res.min_discord:.10f} at eps = {res.argmin_channel.matrix[1, 0]:.6f}, certified = {res.certified}")

###############################################################################
# Every entry at least 0.05. The search starts from the polytope's vertices,
# since the discord is concave in the channel, and the result is checked
# against an exhaustive grid.

fam = EntrywiseLowerBound(0.05)
res = stochastic_discord(p, fam, seed=0)
oracle = grid_oracle(p, fam, step=1e-3)
print(f"search: {res.min_discord:.10f}   grid: {oracle.min_discord:.10f}   slack: {oracle.slack:.3g}")
print(res.argmin_channel.matrix)

###############################################################################
# With no lower bound the identity is allowed and the minimum is zero.

print(stochastic_discord(p, EntrywiseLowerBound(0.0)).min_discord)
