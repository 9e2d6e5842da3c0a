import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mhom import spaces


@pytest.fixture(scope="session")
def s1():
    return spaces.load_space("s1")


@pytest.fixture(scope="session")
def s2():
    return spaces.load_space("s2")


@pytest.fixture(scope="session")
def torus():
    return spaces.load_space("torus")


@pytest.fixture(scope="session")
def arcs3(s1):
    return spaces.load_cover(s1, "s1_arcs3")


@pytest.fixture(scope="session")
def arcs2(s1):
    return spaces.load_cover(s1, "s1_arcs2")


@pytest.fixture(scope="session")
def torus_balls(torus):
    return spaces.load_cover(torus, "torus_balls")
