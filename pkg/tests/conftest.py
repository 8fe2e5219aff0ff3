import random

import pytest
from hypothesis import settings

from nestedcycles.families import (
    FIXTURES_3CONNECTED,
    random_triangulation,
    random_two_connected_planar,
)

settings.register_profile("ci", max_examples=40, deadline=None)
settings.load_profile("ci")


def ids_of(g, *pairs):
    """Edge ids of a simple graph picked by endpoint pairs."""
    out = []
    for u, v in pairs:
        (eid,) = g.edges_between(u, v)
        out.append(eid)
    return g.edge_set(out)


@pytest.fixture(params=sorted(FIXTURES_3CONNECTED))
def three_connected(request):
    return request.param, FIXTURES_3CONNECTED[request.param]()


def triangulations(count=5, seed=7, max_n=14):
    rng = random.Random(seed)
    return [random_triangulation(rng.randint(5, max_n), rng) for _ in range(count)]


def two_connected_samples(count=10, seed=11, max_n=14, parallels=0):
    rng = random.Random(seed)
    return [random_two_connected_planar(max_n, rng, parallels=parallels) for _ in range(count)]


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.VERDICTS:
        return
    terminalreporter.section("acceptance verdicts")
    for line in module.VERDICTS:
        terminalreporter.write_line(line)
