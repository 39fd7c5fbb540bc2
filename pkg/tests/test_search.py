from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import KNOWN_ORDERS, corpus
from hypercover.cayley import Graph, cycle_graph, hypercube, symmetric_cayley_graph
from hypercover.symmetry import automorphism_group, enumerate_automorphisms
from hypercover.symmetry.search import MAX_VERTICES

CORPUS = corpus()


def test_corpus_size():
    assert len(CORPUS) == 20
    assert all(g.n <= 10 for g in CORPUS.values())


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_engine_matches_brute_force(name):
    graph = CORPUS[name]
    result = automorphism_group(graph)
    brute = set(enumerate_automorphisms(graph))
    assert result.order == len(brute) == KNOWN_ORDERS[name]
    assert set(result.group.elements()) == brute


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 8))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


@given(small_graphs())
def test_engine_matches_brute_force_random(graph):
    result = automorphism_group(graph)
    brute = set(enumerate_automorphisms(graph))
    assert result.order == len(brute)
    assert all(graph.is_automorphism(g) for g in result.generators)
    assert all(g in result.group for g in brute)


@pytest.mark.parametrize("graph,order", [
    (cycle_graph(8), 16),
    (hypercube(4), 384),
    (symmetric_cayley_graph(1), 16),
    (symmetric_cayley_graph(3), 92160),
])
def test_known_orders(graph, order):
    assert automorphism_group(graph).order == order


def test_order_is_label_independent(rng):
    graph = symmetric_cayley_graph(2)
    base = automorphism_group(graph).order
    for _ in range(5):
        perm = list(range(graph.n))
        rng.shuffle(perm)
        assert automorphism_group(graph.relabel(perm)).order == base


def test_disconnected_and_trivial_graphs():
    assert automorphism_group(Graph.from_edges(1, [])).order == 1
    assert automorphism_group(Graph.from_edges(5, [])).order == 120
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert automorphism_group(two_triangles).order == 72
    # asymmetric tree on 7 vertices
    tree = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)])
    assert automorphism_group(tree).order == len(enumerate_automorphisms(tree))


def test_colours_are_respected():
    c6 = cycle_graph(6)
    colours = [0, 1, 0, 1, 0, 1]
    result = automorphism_group(c6, colours)
    assert result.order == 6
    assert all(colours[g[v]] == colours[v] for g in result.generators for v in range(6))
    with pytest.raises(ValueError):
        automorphism_group(c6, [0, 1])


def test_size_guard():
    big = Graph(MAX_VERTICES + 1, tuple([0] * (MAX_VERTICES + 1)))
    with pytest.raises(ValueError):
        automorphism_group(big)


def test_deterministic():
    graph = symmetric_cayley_graph(2)
    a, b = automorphism_group(graph), automorphism_group(graph)
    assert a.generators == b.generators and a.base == b.base


@given(small_graphs(), st.integers(0, 7))
def test_orbit_stabilizer(graph, v):
    v %= graph.n
    group = automorphism_group(graph).group
    assert group.order() == len(group.orbit(v)) * group.stabilizer(v).order()


def test_strongly_regular_graphs_need_branching():
    # Paley graph on 9 vertices = K3 x K3 rook graph: refinement alone stalls on it
    rook = Graph.from_edges(9, [(u, v) for v in range(9) for u in range(v) if u // 3 == v // 3 or u % 3 == v % 3])
    assert automorphism_group(rook).order == len(enumerate_automorphisms(rook)) == 72


def test_random_regular_graph_against_networkx():
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.isomorphism import GraphMatcher

    g = nx.random_regular_graph(3, 16, seed=random.Random(0).randrange(1000))
    graph = Graph.from_edges(16, list(g.edges()))
    count = sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())
    assert automorphism_group(graph).order == count
