"""
Shared fixtures
"""
import pytest

from src.game import GameSolver
from src.graphs import GstDescriptor, certificate_tree, complete, path


@pytest.fixture
def p3():
    """P_3 rooted at an end: 0 - 1 - 2"""
    return path(3, root=0)


@pytest.fixture
def k3():
    return complete(3, root=0)


@pytest.fixture
def p3_solver(p3):
    return GameSolver(p3)


@pytest.fixture
def tree():
    return certificate_tree()


@pytest.fixture
def g22_edge():
    """G_{2,2} with H = K_2: root 0, T = {1, 2}, S = {3, 4}"""
    return GstDescriptor(s=2, t=2, h_edges=frozenset({(0, 1)}))


@pytest.fixture
def g32():
    """G_{3,2} with H edgeless"""
    return GstDescriptor(s=3, t=2)
