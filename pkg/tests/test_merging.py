import itertools

import numpy as np
import pytest
from numpy.testing import assert_allclose

from cdiscord import (
    StochasticChannel,
    binary_symmetric,
    identity_channel,
    is_conditionally_pure,
    pair_marginal,
    purify,
    uniform_channel,
    verify_merging_identity,
    verify_merging_identity_general,
)
from cdiscord.errors import DimensionMismatch, OutOfRange

from oracles import cond_entropy_double_sum, h, h2, noisy_loops


class TestPurify:
    def test_point_mass(self):
        t = purify(0, 0, 0, 0.0).distribution.probs
        assert t[0, 0, 0] == 1.0 and t.sum() == 1.0

    def test_half(self):
        t = purify(0, 1, 0, 0.5).distribution.probs
        assert t[0, 1, 0] == 0.5 and t[1, 0, 1] == 0.5
        assert np.count_nonzero(t) == 2

    def test_entropies(self):
        triple = purify(0, 0, 0, 0.3)
        p_ac = pair_marginal(triple.distribution, ("A", "C"))
        assert_allclose(h(p_ac.probs.sum(axis=0)), 0.8812908992306927, atol=1e-12)
        assert_allclose(h(p_ac.probs.ravel()), 0.8812908992306927, atol=1e-12)

    @pytest.mark.parametrize("bits", list(itertools.product([0, 1], repeat=3)))
    @pytest.mark.parametrize("q", [0, 0.25, 0.5, 0.75, 1])
    def test_tripartite_purity(self, bits, q):
        triple = purify(*bits, q)
        assert max(triple.conditional_entropies()) <= 1e-10
        for axes in (("A", "B"), ("A", "C"), ("B", "C")):
            assert is_conditionally_pure(pair_marginal(triple.distribution, axes))[0]

    def test_range(self):
        with pytest.raises(OutOfRange):
            purify(0, 0, 0, 1.5)
        with pytest.raises(OutOfRange):
            purify(0, 2, 0, 0.5)


class TestPairMarginal:
    def test_examples(self):
        t = purify(0, 0, 0, 0.3).distribution
        assert_allclose(pair_marginal(t, ("A", "C")).probs, [[0.7, 0], [0, 0.3]])
        assert_allclose(pair_marginal(t, ("A", "B")).probs, [[0.7, 0], [0, 0.3]])
        assert_allclose(pair_marginal(purify(0, 0, 0, 0).distribution, ("A", "C")).probs, [[1, 0], [0, 0]])

    def test_order(self):
        t = purify(0, 1, 0, 0.2).distribution
        ab = pair_marginal(t, ("A", "B")).probs
        assert_allclose(pair_marginal(t, ("B", "A")).probs, ab.T)


class TestMergingIdentity:
    def test_identity_channel(self):
        r = verify_merging_identity(0.3, identity_channel(2))
        assert max(abs(r.lhs_discord_AC), abs(r.mid_H_A_given_Cprime), abs(r.rhs_H_A_given_Bprime)) <= 1e-12

    @pytest.mark.parametrize("q", [0.0, 0.1, 0.3, 0.5, 0.9])
    def test_uniform_channel(self, q):
        r = verify_merging_identity(q, uniform_channel(2))
        for v in (r.lhs_discord_AC, r.mid_H_A_given_Cprime, r.rhs_H_A_given_Bprime):
            assert_allclose(v, h2(q), atol=1e-12)

    def test_bsc_worked_value(self):
        noisy = noisy_loops([[0.7, 0], [0, 0.3]], [[0.9, 0.1], [0.1, 0.9]])
        assert_allclose(noisy, [[0.63, 0.07], [0.03, 0.27]], atol=1e-15)
        expected = cond_entropy_double_sum(noisy)
        assert_allclose(expected, 0.42546778784694395, atol=1e-14)
        r = verify_merging_identity(0.3, binary_symmetric(0.1))
        for v in (r.lhs_discord_AC, r.mid_H_A_given_Cprime, r.rhs_H_A_given_Bprime, r.expanded_discord_AC):
            assert_allclose(v, expected, atol=1e-12)
        assert r.max_discrepancy <= 1e-10

    def test_line_by_line(self):
        for q in np.linspace(0, 1, 21):
            r = verify_merging_identity(q, binary_symmetric(0.2))
            assert abs(r.H_C - r.H_AC) <= 1e-12
            assert abs(r.H_C - h2(q)) <= 1e-12
            assert abs(r.expanded_discord_AC - r.mid_H_A_given_Cprime) <= 1e-10
            assert abs(r.expanded_discord_AC - r.lhs_discord_AC) <= 1e-10

    def test_sweep(self):
        channels = [identity_channel(2), uniform_channel(2)] + [binary_symmetric(e) for e in np.linspace(0, 0.5, 11)]
        for q in np.linspace(0, 1, 101):
            for m in channels:
                r = verify_merging_identity(q, m)
                assert r.max_discrepancy <= 1e-10
                assert min(r.lhs_discord_AC, r.mid_H_A_given_Cprime, r.rhs_H_A_given_Bprime) >= 0

    def test_asymmetric_channel_same_on_both(self):
        m = StochasticChannel([[0.8, 0.3], [0.2, 0.7]])
        for bits in [(0, 0, 0), (1, 0, 0), (0, 1, 1)]:
            assert verify_merging_identity(0.4, m, bits).max_discrepancy <= 1e-10

    def test_general_variant(self):
        r = verify_merging_identity_general(0.3, binary_symmetric(0.05), binary_symmetric(0.2))
        assert r.max_discrepancy <= 1e-10
        assert abs(r.rhs_H_A_given_Bprime - r.mid_H_A_given_Cprime) > 1e-3

    def test_needs_one_bit_channel(self):
        with pytest.raises(DimensionMismatch):
            verify_merging_identity(0.3, identity_channel(3))
