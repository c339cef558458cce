"""
Channels that leave a given state untouched
===========================================

For a fixed state, the channels with zero discord form a convex polytope
cut out by linear equalities. A small simplex solver finds a member and,
for small alphabets, all the vertices.
"""

from cdiscord import new_joint, zero_discord_channels

# Perfect correlation: only the identity survives.
poly = zero_discord_channels(new_joint([[0.5, 0.0], [0.0, 0.5]]))
print("identity only:", poly.is_singleton)

###############################################################################
# Uniform product state: every doubly stochastic matrix works, and the
# vertices are the identity and the swap.

poly = zero_discord_channels(new_joint([[0.25, 0.25], [0.25, 0.25]]))
for v in poly.vertices():
    print(v.matrix)

###############################################################################
# A state where one value of B never occurs leaves that column free.

poly = zero_discord_channels(new_joint([[0.3, 0.0], [0.7, 0.0]]))
print("sample channel (min trace):")
print(poly.sample_point.matrix)
print("vertices:", [v.matrix.tolist() for v in poly.vertices()])
