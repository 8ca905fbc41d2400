import hypothesis
import pytest

from hat.seidel import rng


pytest_plugins = ['hat.doit.pytest']

hypothesis.settings.register_profile('hat-seidel',
                                     max_examples=50,
                                     deadline=None)
hypothesis.settings.load_profile('hat-seidel')


@pytest.fixture
def generator():
    return rng.SplitMix64(0)
