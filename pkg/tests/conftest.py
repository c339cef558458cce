import numpy as np
import pytest

from cdiscord import JointDistribution, StochasticChannel


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_state(rng, d_a, d_b):
    return JointDistribution(rng.dirichlet(np.ones(d_a * d_b)).reshape(d_a, d_b))


def random_channel(rng, d):
    return StochasticChannel(rng.dirichlet(np.ones(d), size=d).T)


CORRELATED_BIT = [[0.5, 0.0], [0.0, 0.5]]
PRODUCT_UNIFORM = [[0.25, 0.25], [0.25, 0.25]]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
