import networkx as nx
import pytest

from egrgraphs.graph import Graph

DEFAULT_SEED = 20211


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized property tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


def from_nx(H) -> Graph:
    H = nx.convert_node_labels_to_integers(H, ordering="sorted")
    return Graph(H.number_of_nodes(), H.edges())


def named(name: str) -> Graph:
    builders = {
        "K3": lambda: nx.complete_graph(3),
        "K4": lambda: nx.complete_graph(4),
        "K33": lambda: nx.complete_bipartite_graph(3, 3),
        "Q3": lambda: nx.hypercube_graph(3),
        "C5": lambda: nx.cycle_graph(5),
        "C6": lambda: nx.cycle_graph(6),
        "2K3": lambda: nx.disjoint_union(nx.complete_graph(3), nx.complete_graph(3)),
        "P4": lambda: nx.path_graph(4),
        "petersen": nx.petersen_graph,
        "dodecahedron": nx.dodecahedral_graph,
        "heawood": nx.heawood_graph,
        "mobius_kantor": lambda: nx.LCF_graph(16, [5, -5], 8),
        "pappus": nx.pappus_graph,
        "desargues": nx.desargues_graph,
    }
    return from_nx(builders[name]())


@pytest.fixture
def graph_named():
    return named


# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
