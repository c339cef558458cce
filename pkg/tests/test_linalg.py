import numpy as np
import pytest
from numpy.testing import assert_allclose

from cdiscord import b_noise_operator, kron, sandwich_operator, unvec, vec
from cdiscord.errors import SizeMismatch


class TestVec:
    def test_column_major(self):
        assert_allclose(vec([[1, 2], [3, 4]]), [1, 3, 2, 4])
        assert_allclose(vec(np.eye(2)), [1, 0, 0, 1])
        assert_allclose(vec([[7.5]]), [7.5])

    def test_row_major_option(self):
        assert_allclose(vec([[1, 2], [3, 4]], order="C"), [1, 2, 3, 4])

    def test_unvec(self):
        assert_allclose(unvec([1, 3, 2, 4], 2, 2), [[1, 2], [3, 4]])
        assert_allclose(unvec([1, 0, 0, 1], 2, 2), np.eye(2))

    def test_roundtrip(self, rng):
        m = rng.random((3, 5))
        assert_allclose(unvec(vec(m), 3, 5), m, atol=0)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            unvec([1, 2, 3], 2, 2)


class TestKron:
    def test_block_diagonal(self):
        m = np.array([[0.9, 0.2], [0.1, 0.8]])
        k = kron(np.eye(2), m)
        assert_allclose(k[:2, :2], m)
        assert_allclose(k[2:, 2:], m)
        assert_allclose(k[:2, 2:], 0)

    def test_stochastic_closure(self, rng):
        a = rng.dirichlet(np.ones(3), size=3).T
        b = rng.dirichlet(np.ones(2), size=2).T
        assert_allclose(kron(a, b).sum(axis=0), 1.0, atol=1e-12)

    @pytest.mark.parametrize("n", [2, 3])
    def test_sandwich_identity(self, rng, n):
        for _ in range(100):
            a, b, c = rng.standard_normal((3, n, n))
            d = a @ c @ b.T
            assert np.max(np.abs(sandwich_operator(a, b) @ vec(c) - vec(d))) <= 1e-12
            # the A-first ordering goes with row stacking
            assert np.max(np.abs(kron(a, b) @ vec(c, "C") - vec(d, "C"))) <= 1e-12

    def test_a_first_ordering_fails_with_column_stacking(self, rng):
        a, b, c = rng.standard_normal((3, 2, 2))
        assert np.max(np.abs(kron(a, b) @ vec(c) - vec(a @ c @ b.T))) > 1e-3

    def test_b_noise_operator(self, rng):
        p = rng.random((3, 2))
        m = rng.dirichlet(np.ones(2), size=2).T
        assert_allclose(b_noise_operator(m, 3) @ vec(p), vec(p @ m.T), atol=1e-15)
        assert_allclose(b_noise_operator(m, 3, order="C"), np.kron(np.eye(3), m))
