"""
Discord and the cost of merging
===============================

Three parties hold copies of a biased bit. Noise on the readouts of B and C
makes the discord from A to C equal to the conditional entropy of A given
the noisy copy, which is the classical cost of merging A's share.
"""

import numpy as np

from cdiscord import binary_symmetric, purify, verify_merging_identity

triple = purify(0, 0, 0, q=0.3)
print("H(A|BC), H(B|AC), H(C|AB):", triple.conditional_entropies())

###############################################################################
# One channel, one bias.

r = verify_merging_identity(0.3, binary_symmetric(0.1))
print(f"D(A->C) = {r.lhs_discord_AC:.12f}")
print(f"H(A|C') = {r.mid_H_A_given_Cprime:.12f}")
print(f"H(A|B') = {r.rhs_H_A_given_Bprime:.12f}")

###############################################################################
# A sweep over bias and noise. The three quantities agree to rounding error.

worst = 0.0
for q in np.linspace(0, 1, 11):
    for eps in np.linspace(0, 0.5, 11):
        worst = max(worst, verify_merging_identity(q, binary_symmetric(eps)).max_discrepancy)
print("largest discrepancy:", worst)
