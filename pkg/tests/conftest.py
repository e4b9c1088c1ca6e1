import numpy as np
import pytest

from svetlichny_core.logging import LogStreamer
from svetlichny_core.spin import SpinJ


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def half():
    return SpinJ(1)


@pytest.fixture
def spin_one():
    return SpinJ(2)


@pytest.fixture
def logger(tmp_path):
    return LogStreamer(str(tmp_path / "logs" / "test.log"))
