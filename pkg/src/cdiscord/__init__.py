"""Classical discord of bipartite distributions under noisy measurement channels."""
from .channels import (
    StochasticChannel,
    apply_to_a,
    apply_to_axis,
    apply_to_b,
    binary_symmetric,
    block_channel,
    identity_channel,
    new_channel,
    tensor_channel,
    uniform_channel,
)
from .discord import DiscordReport, classical_discord, discord_value, is_zero_discord, measured_mutual_information
from .distributions import (
    JointDistribution,
    TripartiteDistribution,
    binary_entropy,
    conditional_entropy_a_given_b,
    conditional_entropy_b_given_a,
    is_conditionally_pure,
    joint_entropy,
    marginal_a,
    marginal_b,
    mutual_information,
    new_joint,
    shannon_entropy,
)
from .errors import *  # noqa: F401,F403
from .linalg import b_noise_operator, kron, sandwich_operator, unvec, vec
from .merging import (
    MergingReport,
    PurifiedTriple,
    pair_marginal,
    purify,
    verify_merging_identity,
    verify_merging_identity_general,
)
from .optimizer import (
    EntrywiseLowerBound,
    ExplicitSet,
    MinimizationResult,
    ParametricBSC,
    grid_oracle,
    stochastic_discord,
)
from .simplex import solve_lp
from .zero_discord import (
    ChannelPolytope,
    StationaryFamily,
    ZeroDiscordState,
    make_zero_discord_state,
    random_zero_discord_state,
    stationary_family,
    zero_discord_channels,
)

__version__ = "0.1.0"
