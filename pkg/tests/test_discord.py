import numpy as np
import pytest
from numpy.testing import assert_allclose

from cdiscord import (
    DiscordReport,
    JointDistribution,
    binary_symmetric,
    classical_discord,
    identity_channel,
    is_zero_discord,
    measured_mutual_information,
    new_joint,
    uniform_channel,
)
from cdiscord.errors import DimensionMismatch

from conftest import CORRELATED_BIT, PRODUCT_UNIFORM, random_channel, random_state
from oracles import discord_loops, h2

H2_01 = 0.4689955935892812


class TestMeasuredInformation:
    def test_identity(self):
        assert_allclose(measured_mutual_information(new_joint(CORRELATED_BIT), identity_channel(2)), 1.0)

    def test_uniform(self):
        assert measured_mutual_information(new_joint(CORRELATED_BIT), uniform_channel(2)) <= 1e-12

    def test_bsc(self):
        j = measured_mutual_information(new_joint(CORRELATED_BIT), binary_symmetric(0.1))
        assert_allclose(j, 0.5310044064107188, atol=1e-12)
        assert_allclose(j, 1 - h2(0.1), atol=1e-12)


class TestClassicalDiscord:
    def test_identity_channel_gives_zero(self, rng):
        for _ in range(20):
            r = classical_discord(random_state(rng, 3, 3), identity_channel(3))
            assert r.discord == 0.0 and r.is_zero

    def test_correlated_bit_bsc(self):
        r = classical_discord(new_joint(CORRELATED_BIT), binary_symmetric(0.1))
        assert_allclose(r.discord, H2_01, atol=1e-12)
        assert_allclose(r.discord, discord_loops(CORRELATED_BIT, binary_symmetric(0.1).matrix), atol=1e-12)
        assert not r.is_zero

    def test_product_state(self, rng):
        p = new_joint(PRODUCT_UNIFORM)
        for _ in range(20):
            assert abs(classical_discord(p, random_channel(rng, 2)).discord) <= 1e-10

    def test_report_consistency(self, rng):
        r = classical_discord(random_state(rng, 2, 3), random_channel(rng, 3))
        assert r.discord == r.mutual_information_I - r.measured_J
        assert DiscordReport.from_json(r.to_json()) == r

    def test_mismatch(self):
        with pytest.raises(DimensionMismatch):
            classical_discord(new_joint(CORRELATED_BIT), identity_channel(4))

    def test_mirrored_direction_by_transpose(self):
        p = new_joint([[0.4, 0.1, 0.0], [0.1, 0.2, 0.2]])
        r = classical_discord(p.transpose(), binary_symmetric(0.2))
        assert_allclose(r.discord, discord_loops(p.probs.T, binary_symmetric(0.2).matrix), atol=1e-12)

    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_nonnegative_matches_loops(self, rng, d):
        for _ in range(100):
            p = random_state(rng, d, d)
            m = random_channel(rng, d)
            r = classical_discord(p, m)
            assert r.discord >= -1e-9
            assert abs(r.discord - discord_loops(p.probs, m.matrix)) <= 1e-10

    def test_bsc_monotone(self):
        eps = np.linspace(0, 0.5, 51)
        vals = [classical_discord(new_joint(CORRELATED_BIT), binary_symmetric(e)).discord for e in eps]
        assert_allclose(vals, [h2(e) for e in eps], atol=1e-12)
        assert np.all(np.diff(vals) > 0)


class TestZeroDiscord:
    def test_identity(self, rng):
        assert is_zero_discord(random_state(rng, 2, 2), identity_channel(2))

    def test_correlated_bit_bsc(self):
        assert not is_zero_discord(new_joint(CORRELATED_BIT), binary_symmetric(0.1))

    def test_product_with_stationary_b(self):
        p = JointDistribution(np.outer([0.8, 0.2], [0.5, 0.5]))
        assert is_zero_discord(p, binary_symmetric(0.3), tol=1e-15)

    def test_agrees_with_entropy_test(self, rng):
        for _ in range(500):
            d = rng.choice([2, 3])
            p = random_state(rng, 2, d)
            m = identity_channel(d) if rng.random() < 0.2 else random_channel(rng, d)
            assert is_zero_discord(p, m, 1e-12) == (classical_discord(p, m).discord <= 1e-10)


def test_product_states_escape_the_fixed_point_test():
    # independent A and B carry no information to lose, so D = 0 even
    # though the B marginal is not stationary for the channel
    p = JointDistribution(np.outer([0.6, 0.4], [0.9, 0.1]))
    m = binary_symmetric(0.2)
    assert classical_discord(p, m).discord <= 1e-15
    assert not is_zero_discord(p, m, 1e-3)
