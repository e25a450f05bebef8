import pytest

import halinstar as hs
from halinstar._kernels import warmup


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # jit compilation happens once here so timed tests measure the search
    warmup()


@pytest.fixture(scope="session")
def k4():
    return hs.build_halin(hs.PlaneTree(0, [(1, 2, 3), (), (), ()]))


@pytest.fixture(scope="session")
def ell3():
    return hs.build_halin(hs.generate(hs.GenSpec("ellThreeCubic")))


@pytest.fixture(scope="session")
def wheel5():
    return hs.build_halin(hs.generate(hs.GenSpec("wheel", n=5)))


# plain edge-list graphs for the oracle and verifier
P5_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4))
C4_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0))
STAR5_EDGES = ((0, 1), (0, 2), (0, 3), (0, 4), (0, 5))
