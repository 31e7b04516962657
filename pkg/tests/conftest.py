import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corpus import all_graphs, connected_graphs, graphs_up_to


@pytest.fixture(scope="session")
def graphs_to_6():
    """All graphs up to isomorphism, n <= 6 (213 graphs)."""
    return graphs_up_to(6)


@pytest.fixture(scope="session")
def connected_to_6():
    """All nonempty connected graphs up to isomorphism, n <= 6 (143)."""
    out = []
    for n in range(1, 7):
        out.extend(connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def graphs_7():
    return all_graphs(7)


@pytest.fixture(scope="session")
def graphs_8():
    return all_graphs(8)
