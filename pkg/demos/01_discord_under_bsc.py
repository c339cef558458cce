"""
Classical discord of a correlated bit
=====================================

Two parties share a perfectly correlated random bit. Bob reads his copy
through a binary symmetric channel that flips it with probability ``eps``.
The information lost to the noisy readout is the classical discord, and for
this state it equals the binary entropy of the flip probability.
"""

import numpy as np

from cdiscord import binary_entropy, binary_symmetric, classical_discord, new_joint

p = new_joint([[0.5, 0.0], [0.0, 0.5]])

# A single noise level: I = 1 bit before the readout, J after it.
report = classical_discord(p, binary_symmetric(0.1))
print(f"I = {report.mutual_information_I:.6f}  J = {report.measured_J:.6f}  D = {report.discord:.10f}")

###############################################################################
# Sweeping the noise level traces out h2(eps), rising from 0 for a perfect
# readout to a full bit when the channel erases everything.

for eps in np.linspace(0.0, 0.5, 6):
    d = classical_discord(p, binary_symmetric(eps)).discord
    print(f"eps = {eps:.1f}   D = {d:.6f}   h2(eps) = {binary_entropy(eps):.6f}")

###############################################################################
# A product state has nothing to lose, so its discord is zero under any noise.

indep = new_joint(np.outer([0.6, 0.4], [0.9, 0.1]))
print("product state:", classical_discord(indep, binary_symmetric(0.3)).discord)
