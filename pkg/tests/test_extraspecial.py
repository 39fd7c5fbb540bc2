from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercover.cayley import build_cayley
from hypercover.extraspecial import (
    ExtraspecialGroup,
    GroupElement,
    center,
    closure,
    find_isomorphism,
    from_standard_presentation,
    from_symmetric_generators,
    induced_form,
    preimage_flip,
    sigma_tilde,
    verify_sigma_tilde_embedding,
)
from hypercover.quadratic import DegenerateFormError, FormType, singular_count
from hypercover.symmetric_basis import induced_type_of_symmetric_space

HYP, ELL = FormType.HYPERBOLIC, FormType.ELLIPTIC


def all_groups(max_r):
    for r in range(1, max_r + 1):
        yield from_symmetric_generators(r)
        for t in (HYP, ELL):
            yield from_standard_presentation(r, t)


@pytest.mark.parametrize("group", list(all_groups(2)), ids=str)
def test_associativity_exhaustive(group):
    els = list(group.elements())
    m = group.multiply
    table = {(a, b): m(a, b) for a in els for b in els}
    for a, b, c in itertools.product(els, repeat=3):
        assert table[table[a, b], c] == table[a, table[b, c]]


@given(st.integers(1, 8), st.data())
def test_associativity_and_inverse_random(r, data):
    group = from_symmetric_generators(r)
    pick = st.integers(0, group.order - 1).map(group.element)
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    m = group.multiply
    assert m(m(a, b), c) == m(a, m(b, c))
    assert m(a, group.inverse(a)) == group.identity
    assert m(group.identity, a) == a == m(a, group.identity)


@pytest.mark.parametrize("group", list(all_groups(3)), ids=str)
def test_center_and_generation(group):
    assert set(center(group)) == {group.identity, group.z}
    assert len(closure(group, group.generators())) == group.order == 1 << (2 * group.r + 1)


@pytest.mark.parametrize("group", list(all_groups(2)), ids=str)
def test_squares_and_commutators_are_central(group):
    z_group = {group.identity, group.z}
    els = list(group.elements())
    for a in els:
        assert group.square(a) in z_group
        for b in els:
            assert group.commutator(a, b) in z_group


@pytest.mark.parametrize("r", range(1, 6))
def test_symmetric_generators(r):
    group = from_symmetric_generators(r)
    assert group.is_symmetric
    for i, j in itertools.combinations(range(group.rank), 2):
        gi, gj = group.generator(i), group.generator(j)
        assert group.square(gi) == group.identity
        assert group.commutator(gi, gj) == group.z


def test_small_products():
    group = from_symmetric_generators(2)
    g1, g2 = group.generator(0), group.generator(1)
    assert group.multiply(g2, g1) == GroupElement(1, 0b11)
    assert group.square(group.multiply(g1, g2)) == group.z
    assert group.render(group.multiply(g2, g1)) == "z·g1·g2"
    assert group.render(group.identity) == "1"
    assert group.word([1, 0, 1, 0]) == group.z


@pytest.mark.parametrize("r", range(1, 9))
def test_type_of_symmetric_group(r):
    assert from_symmetric_generators(r).epsilon is induced_type_of_symmetric_space(r)


@pytest.mark.parametrize("group", list(all_groups(3)), ids=str)
def test_involution_count_matches_type(group):
    # elements with g^2 = 1 are exactly the two preimages of each singular coset
    involutions = sum(1 for g in group.elements() if group.square(g) == group.identity)
    assert involutions == 2 * singular_count(group.r, group.epsilon)


@pytest.mark.parametrize("r", [1, 2])
def test_isomorphism_oracle(r):
    sym = from_symmetric_generators(r)
    same = from_standard_presentation(r, induced_type_of_symmetric_space(r))
    other = from_standard_presentation(r, ELL if same.epsilon is HYP else HYP)
    images = find_isomorphism(sym, same)
    assert images is not None
    assert find_isomorphism(sym, other) is None
    # extend the generator images to a map on all elements and check it is a homomorphism
    phi = {g: same.product([images[i] for i in range(sym.rank) if g.coset >> i & 1]) for g in sym.elements()}
    phi = {g: (same.multiply(same.z, v) if g.center else v) for g, v in phi.items()}
    assert len(set(phi.values())) == sym.order
    for a, b in itertools.product(sym.elements(), repeat=2):
        assert phi[sym.multiply(a, b)] == same.multiply(phi[a], phi[b])


def test_degenerate_data_rejected():
    with pytest.raises(DegenerateFormError):
        ExtraspecialGroup(2, 0, (0b0010, 0, 0, 0))
    with pytest.raises(ValueError):
        from_symmetric_generators(0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sigma_tilde_embedding(r):
    assert verify_sigma_tilde_embedding(from_symmetric_generators(r))


def test_sigma_tilde_needs_symmetric_generators():
    group = from_standard_presentation(2, ELL)
    assert not verify_sigma_tilde_embedding(group)
    with pytest.raises(ValueError):
        sigma_tilde(group, (1, 0, 2, 3), group.generator(0))
    with pytest.raises(ValueError):
        sigma_tilde(from_symmetric_generators(2), (0, 0, 2, 3), group.generator(0))


def test_sigma_tilde_values():
    group = from_symmetric_generators(2)
    swap = (1, 0, 2, 3)
    g12 = group.word([0, 1])
    # g1 g2 -> g2 g1 = z g1 g2
    assert sigma_tilde(group, swap, g12) == group.multiply(group.z, g12)
    assert sigma_tilde(group, swap, group.z) == group.z


@pytest.mark.parametrize("flips", [0b0001, 0b0110, 0b1111])
def test_preimage_flip_is_automorphism_and_graph_isomorphism(flips):
    group = from_symmetric_generators(2)
    f = preimage_flip(group, flips)
    els = list(group.elements())
    assert len(set(f.values())) == len(els)
    for a, b in itertools.product(els, repeat=2):
        assert f[group.multiply(a, b)] == group.multiply(f[a], f[b])
    plain = build_cayley(group, group.generators())
    flipped = build_cayley(group, [f[s] for s in group.generators()])
    relabel = [group.index(f[g]) for g in plain.labels]
    assert plain.relabel(relabel) == flipped


@pytest.mark.parametrize("group", list(all_groups(3)), ids=str)
def test_json_round_trip(group):
    assert ExtraspecialGroup.from_json(group.to_json()) == group
    assert induced_form(group).dim == group.rank


def test_json_epsilon_checked():
    data = from_symmetric_generators(2).to_json()
    data["epsilon"] = "+"
    with pytest.raises(ValueError):
        ExtraspecialGroup.from_json(data)


def test_element_checks():
    group = from_symmetric_generators(1)
    with pytest.raises(ValueError):
        group.multiply(GroupElement(0, 0b100), group.identity)
    with pytest.raises(IndexError):
        group.generator(2)
    assert group.element(group.index(group.z)) == group.z
