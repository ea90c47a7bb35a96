import pytest

from locdom.graphs import VertexSet, build_graph


def trace_gadget():
    """Distinguishing-set gadget on 13 vertices used across the associated-graph tests.

    S = {0..4}; the eight outside vertices 5..12 carry the traces
    {0,1,2,3}, {1,2,3}, {0,2,3}, {2,3}, {0,2}, {2}, {0,1,3,4}, {1,3,4}
    and have no edges among themselves.  Its label-{0,1} subgraph is a
    4-cycle plus two disjoint edges.
    """
    traces = [
        (0, 1, 2, 3),
        (1, 2, 3),
        (0, 2, 3),
        (2, 3),
        (0, 2),
        (2,),
        (0, 1, 3, 4),
        (1, 3, 4),
    ]
    edges = []
    for i, tr in enumerate(traces):
        for u in tr:
            edges.append((u, 5 + i))
    return build_graph(13, edges), VertexSet.of(range(5))


def equal_size_trace_gadget():
    """Order-6 graph whose set {0,1,2} distinguishes but yields an edgeless associated graph.

    Every outside trace has size two, and dropping label 2 from the set breaks
    distinguishing even though no edge carries label 2.
    """
    edges = [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)]
    return build_graph(6, edges), VertexSet.of((0, 1, 2))


@pytest.fixture
def gadget():
    return trace_gadget()


@pytest.fixture
def flat_gadget():
    return equal_size_trace_gadget()
