"""Session fixtures: medial graphs are immutable and safe to share, so
the expensive ones are built once."""

import pytest

from cheegerkit import domains
from cheegerkit.medial import build_medial


@pytest.fixture(scope="session")
def square_graph():
    return build_medial(domains.unit_square())


@pytest.fixture(scope="session")
def rect_graph():
    return build_medial(domains.rectangle())


@pytest.fixture(scope="session")
def keyed_graph():
    return build_medial(domains.keyed_square())


@pytest.fixture(scope="session")
def dumbbell_graph():
    return build_medial(domains.dumbbell())


@pytest.fixture(scope="session")
def staircase_graph():
    return build_medial(domains.staircase())


@pytest.fixture(scope="session")
def gon720():
    return domains.regular_polygon(720, 1.0)


@pytest.fixture(scope="session")
def gon720_graph(gon720):
    return build_medial(gon720)
