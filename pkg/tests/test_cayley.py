from __future__ import annotations

import pytest

from hypercover.cayley import (
    CyclicGroup,
    ElementaryAbelianGroup,
    Graph,
    NotACycleError,
    NotGeneratingError,
    build_cayley,
    center_fibers,
    cycle_graph,
    eight_cycle,
    even_occurrence_check,
    extract_cycle_sequence,
    hypercube,
    hypercube_isomorphism,
    is_cover,
    quotient,
    quotient_by_center,
    symmetric_cayley_graph,
)
from hypercover.extraspecial import from_symmetric_generators


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_symmetric_cayley_graph_shape(r):
    g = symmetric_cayley_graph(r)
    assert g.n == 1 << (2 * r + 1)
    assert g.valency == 2 * r
    assert g.is_connected()
    assert g.num_edges == g.n * r


def test_connection_set_validation():
    group = from_symmetric_generators(2)
    with pytest.raises(NotGeneratingError) as info:
        build_cayley(group, group.generators()[:3])
    assert len(info.value.component) == 16
    with pytest.raises(ValueError, match="identity"):
        build_cayley(group, [group.identity, *group.generators()])
    g12 = group.word([0, 1])  # order 4, inverse is z g1 g2
    with pytest.raises(ValueError, match="inverse-closed"):
        build_cayley(group, [*group.generators(), g12])
    with pytest.raises(ValueError):
        symmetric_cayley_graph(6)


def test_small_graphs():
    c8 = cycle_graph(8)
    assert c8.valency == 2 and c8.num_edges == 8 and c8.is_connected()
    q3 = hypercube(3)
    assert q3.valency == 3 and q3.num_edges == 12
    assert Graph.from_edges(4, [(0, 1), (2, 3)]).components() == [[0, 1], [2, 3]]
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_is_automorphism_rejects_non_bijections():
    g = Graph.from_edges(3, [])
    assert g.is_automorphism((2, 0, 1))
    assert not g.is_automorphism((0, 0, 0))
    assert not g.is_automorphism((0, 1))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_quotient_by_center_is_hypercube_and_covered(r):
    group = from_symmetric_generators(r)
    graph = symmetric_cayley_graph(r)
    quot = quotient_by_center(group, graph)
    phi = hypercube_isomorphism(group, group.generators(), quot)
    assert quot.relabel(phi) == hypercube(2 * r)
    report = is_cover(graph, quot, center_fibers(group))
    assert report and report.valency == report.quotient_valency == 2 * r and report.uniform_fibers


def test_center_fibers_are_z_orbits():
    group = from_symmetric_generators(2)
    for a, b in center_fibers(group):
        assert group.multiply(group.z, group.element(a)) == group.element(b)


def test_non_cover_detected():
    # the 8-cycle over the 4-cycle by antipodal pairs is a cover; pairing neighbours is not
    c8 = cycle_graph(8)
    good = [[0, 4], [1, 5], [2, 6], [3, 7]]
    fiber_of = [i % 4 for i in range(8)]
    assert is_cover(c8, quotient(c8, fiber_of, 4), good)
    bad = [[0, 1], [2, 3], [4, 5], [6, 7]]
    fiber_of = [i // 2 for i in range(8)]
    report = is_cover(c8, quotient(c8, fiber_of, 4), bad)
    assert not report and "own fiber" in report.witness
    # quotient that does not match the fibers
    assert not is_cover(c8, hypercube(2), bad)
    with pytest.raises(ValueError):
        is_cover(c8, hypercube(2), [[0, 1], [1, 2], [3, 4], [5, 6, 7]])


def test_eight_cycle_values():
    group = from_symmetric_generators(2)
    cyc = eight_cycle(group, 0, 1)
    assert cyc == [0, 1, 19, 18, 16, 17, 3, 2]
    labels = [group.element(v) for v in cyc]
    assert labels[4] == group.z  # c5
    assert labels[7] == group.generator(1)  # c8
    with pytest.raises(ValueError):
        eight_cycle(group, 1, 1)


def test_extract_cycle_sequence_alternates():
    group = from_symmetric_generators(2)
    graph = symmetric_cayley_graph(2)
    seq = extract_cycle_sequence(graph, eight_cycle(group, 0, 1)).seq
    g1, g2 = group.generator(0), group.generator(1)
    assert seq == (g1, g2) * 4
    assert even_occurrence_check(group, seq)
    with pytest.raises(NotACycleError):
        extract_cycle_sequence(graph, [0, 1, 2])
    with pytest.raises(NotACycleError):
        extract_cycle_sequence(graph, [0, 1, 0, 1])


def test_cycle_sequence_on_a_cyclic_group():
    c8 = cycle_graph(8)
    seq = extract_cycle_sequence(c8, list(range(8))).seq
    assert seq == (1,) * 8


@pytest.mark.parametrize("r", [1, 2, 3])
def test_random_closed_walks_even_occurrence(r, rng):
    """Walks from 1 ending in the center use every generator an even number of times."""
    group = from_symmetric_generators(r)
    gens = group.generators()
    closed = 0
    while closed < 10_000:
        length = 2 * rng.randrange(1, 9)
        seq = [rng.choice(gens) for _ in range(length)]
        g = group.identity
        for s in seq:
            g = group.multiply(s, g)
        if g.coset:
            continue
        closed += 1
        assert even_occurrence_check(group, seq)
        # the endpoint is z exactly when the central sign of the walk is odd
        assert g.center in (0, 1)


def test_even_occurrence_check_flags_odd_usage():
    group = from_symmetric_generators(1)
    g1, g2 = group.generators()
    assert even_occurrence_check(group, [g1, g2])  # product not central: nothing to check
    assert even_occurrence_check(group, [g1, g2, g1, g2])


def test_other_groups():
    z5 = CyclicGroup(5)
    k5 = build_cayley(z5, [1, 2, 3, 4])
    assert k5.num_edges == 10
    e3 = ElementaryAbelianGroup(3)
    assert build_cayley(e3, e3.generators()) == hypercube(3)
    assert e3.render(0b011) == "110"
