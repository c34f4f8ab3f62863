"""Graph helpers and hypothesis strategies shared by the test modules."""
from itertools import combinations

import networkx as nx
from hypothesis import strategies as st

from symmetric_systems.core.graph import SystemGraph, VertexSet
from symmetric_systems.core.group import GeneratorSet, Permutation


def graph_from_networkx(G: nx.Graph) -> SystemGraph:
    nodes = sorted(G.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return SystemGraph.from_edges(len(nodes), [(index[u], index[v]) for u, v in G.edges()])


def cycle_graph(n: int):
    g = SystemGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    rotation = Permutation(tuple((i + 1) % n for i in range(n)))
    return g, GeneratorSet.of([rotation])


def brute_alpha(g: SystemGraph) -> int:
    """Independence number as the largest clique of the complement."""
    _, weight = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return weight


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SystemGraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def vertex_sets(draw, universe):
    return VertexSet(universe, draw(st.integers(0, (1 << universe) - 1)))


@st.composite
def graph_with_set(draw, max_n=10):
    g = draw(graphs(max_n=max_n))
    return g, draw(vertex_sets(g.vertex_count))
