import networkx as nx
import pytest
from hypothesis import settings

from cubicdom.graph import Graph

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


def from_nx(h) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


@pytest.fixture(scope="session")
def atlas_graphs():
    """Every graph on 1..7 vertices from the networkx atlas."""
    return [from_nx(h) for h in nx.graph_atlas_g()[1:]]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for k in sorted(results):
            terminalreporter.write_line(results[k])
