import pytest

from egrgraphs.errors import ParameterError
from egrgraphs.graph import ACYCLIC, Graph, girth


@pytest.mark.parametrize(
    "name, expected",
    [("petersen", 5), ("C6", 6), ("K3", 3), ("K4", 3), ("heawood", 6), ("Q3", 4), ("dodecahedron", 5)],
)
def test_girth(graph_named, name, expected):
    assert girth(graph_named(name)) == expected


def test_girth_acyclic(graph_named):
    assert girth(graph_named("P4")) is ACYCLIC
    assert girth(Graph(3)) is ACYCLIC
    with pytest.raises(TypeError):
        ACYCLIC < 3


def test_graph_rejects_loops_and_range():
    with pytest.raises(ParameterError):
        Graph(3, [(0, 0)])
    with pytest.raises(ParameterError):
        Graph(3, [(0, 3)])


def test_graph_immutable_and_symmetric():
    G = Graph(4, [(0, 1), (1, 2), (2, 0), (2, 1)])
    assert G.adj == ((1, 2), (0, 2), (0, 1), ())
    assert G.num_edges == 3
    with pytest.raises(AttributeError):
        G.n = 5


def test_from_adjacency_asymmetric():
    with pytest.raises(ParameterError):
        Graph.from_adjacency([[1], []])
    assert Graph.from_adjacency([[1], [0]]) == Graph(2, [(0, 1)])


def test_relabel_preserves_structure(graph_named):
    G = graph_named("petersen")
    perm = list(reversed(range(G.n)))
    H = G.relabel(perm)
    assert H.num_edges == G.num_edges
    assert all(H.has_edge(perm[u], perm[v]) for u, v in G.edges())


def test_bipartite(graph_named):
    assert graph_named("heawood").is_bipartite()
    assert not graph_named("petersen").is_bipartite()
