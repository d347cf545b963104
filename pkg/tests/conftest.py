import numpy as np
import pytest

from animdmp import Demonstration, learn
from animdmp.synth import feature_demo, min_jerk_demo


@pytest.fixture(scope="session")
def minjerk_demo():
    return min_jerk_demo(0.0, 1.0, 1.0, 0.01)


@pytest.fixture(scope="session")
def rich_demo():
    return feature_demo()


@pytest.fixture(scope="session")
def rich_model(rich_demo):
    return learn(rich_demo, 30)


@pytest.fixture(scope="session")
def demo_4d(rich_demo):
    """Feature motion on dim 1, resting dims elsewhere (coupling targets)."""
    n = rich_demo.n_steps
    cols = np.column_stack([
        np.full(n, 0.2),
        rich_demo.positions[:, 0],
        np.full(n, 0.1),
        np.full(n, 0.3),
    ])
    return Demonstration(dt=rich_demo.dt, positions=cols)


@pytest.fixture(scope="session")
def model_4d(demo_4d):
    return learn(demo_4d, 30)
