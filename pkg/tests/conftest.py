"""
Test fixtures and configuration.
Provides towers, planes and run contexts for the small parameter pairs.
"""

import pytest

from src.dependencies import get_plane, get_tower
from src.verification.context import RunContext

SMALL_CASES = [(1, 1), (1, 2), (2, 1), (2, 2)]


@pytest.fixture(scope="session")
def tower_1_1():
    """GF(4): q = 2, d = 2, n = 3"""
    return get_tower(1, 1)


@pytest.fixture(scope="session")
def tower_1_2():
    """GF(16): q = 4, d = 2, n = 5, N = 3"""
    return get_tower(1, 2)


@pytest.fixture(scope="session")
def tower_2_1():
    """GF(16): q = 4, d = 4, n = 15, N = 1"""
    return get_tower(2, 1)


@pytest.fixture(scope="session")
def tower_2_2():
    """GF(256): q = 16, d = 4, n = 51, N = 5"""
    return get_tower(2, 2)


@pytest.fixture(scope="session")
def plane_1_2():
    return get_plane(1, 2)


@pytest.fixture(scope="session")
def plane_2_1():
    return get_plane(2, 1)


@pytest.fixture(scope="session")
def plane_2_2():
    return get_plane(2, 2)


@pytest.fixture(scope="session")
def contexts():
    """One shared RunContext per small case, so codes and arcs are built once"""
    return {mk: RunContext(*mk) for mk in SMALL_CASES}


@pytest.fixture(scope="session")
def ctx_1_2(contexts):
    return contexts[(1, 2)]


@pytest.fixture(scope="session")
def ctx_2_2(contexts):
    return contexts[(2, 2)]
