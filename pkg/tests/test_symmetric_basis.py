from __future__ import annotations

import itertools
import json
import warnings

import pytest

from hypercover import gf2
from hypercover.gf2 import GF2Vector
from hypercover.quadratic import FormType, classify, is_isometry, standard_form
from hypercover.symmetric_basis import (
    HypothesisError,
    NotExists,
    SymmetricBasis,
    brute_force_symmetric_basis,
    construct_symmetric_basis,
    exists_symmetric_basis,
    extend_by_three_pairs,
    induced_type_of_symmetric_space,
    is_symmetric_basis,
    weight_parity_q,
)

HYP, ELL = FormType.HYPERBOLIC, FormType.ELLIPTIC
ADMISSIBLE = [(r, induced_type_of_symmetric_space(r)) for r in range(1, 13)]


def subset_sum(vectors, mask):
    acc = 0
    for i in gf2.iter_bits(mask):
        acc ^= vectors[i]
    return acc


def test_existence_rule():
    assert [exists_symmetric_basis(r, HYP) for r in range(1, 9)] == [True, False, False, True, True, False, False, True]
    assert [exists_symmetric_basis(r, ELL) for r in range(1, 9)] == [False, True, True, False, False, True, True, False]
    with pytest.raises(ValueError):
        exists_symmetric_basis(0, HYP)


def test_weight_parity():
    assert [weight_parity_q(t) for t in range(8)] == [0, 0, 1, 1, 0, 0, 1, 1]
    for t in range(40):
        assert weight_parity_q(t) == (t * (t - 1) // 2) % 2


@pytest.mark.parametrize("r,t", ADMISSIBLE)
def test_construction_is_symmetric_basis(r, t):
    basis = construct_symmetric_basis(r, t)
    assert basis
    assert is_symmetric_basis(basis.form, basis.vectors)
    assert classify(basis.form) is t


@pytest.mark.parametrize("r", range(1, 13))
def test_construction_refuses_wrong_type(r):
    wrong = ELL if induced_type_of_symmetric_space(r) is HYP else HYP
    result = construct_symmetric_basis(r, wrong)
    assert isinstance(result, NotExists)
    assert not result
    assert f"{r % 4} (mod 4)" in result.reason


def test_rank_two_elliptic_basis_vectors():
    basis = construct_symmetric_basis(2, ELL)
    e1, f1, x, y = 1, 2, 4, 8
    assert basis.vectors == (e1, f1, x ^ e1 ^ f1, y ^ e1 ^ f1)
    assert basis.vectors == (0b0001, 0b0010, 0b0111, 0b1011)


def test_rank_three_elliptic_fifth_vector():
    c = construct_symmetric_basis(3, ELL).vectors
    e2 = 1 << 2
    assert c[4] == e2 ^ c[0] ^ c[1] ^ c[2] ^ c[3]


@pytest.mark.parametrize("r,t", [(r, t) for r in (1, 2, 3, 4) for t in (HYP, ELL)])
def test_brute_force_agrees_with_existence(r, t):
    result = brute_force_symmetric_basis(standard_form(r, t))
    assert bool(result) == exists_symmetric_basis(r, t)
    if result:
        assert is_symmetric_basis(result.form, result.vectors)


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_symmetric_basis(standard_form(5, HYP))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_subset_sums_exhaustive(r):
    basis = construct_symmetric_basis(r, induced_type_of_symmetric_space(r))
    for mask in range(1 << (2 * r)):
        assert basis.form.q(subset_sum(basis.vectors, mask)) == weight_parity_q(mask.bit_count())


@pytest.mark.parametrize("r", [8, 12])
def test_subset_sums_random(r, rng):
    basis = construct_symmetric_basis(r, induced_type_of_symmetric_space(r))
    for _ in range(10_000):
        mask = rng.getrandbits(2 * r)
        assert basis.form.q(subset_sum(basis.vectors, mask)) == weight_parity_q(mask.bit_count())


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_two_symmetric_bases_differ_by_isometry(r):
    form = standard_form(r, induced_type_of_symmetric_space(r))
    a = construct_symmetric_basis(r, classify(form)).vectors
    b = brute_force_symmetric_basis(form).vectors
    # the map a_i -> b_i, written in standard coordinates
    inv = gf2.invert_columns(list(a), form.dim)
    cols = [gf2.apply_columns(list(b), gf2.apply_columns(inv, 1 << i)) for i in range(form.dim)]
    assert is_isometry(form, form, cols)


def test_every_permutation_of_a_symmetric_basis_is_symmetric():
    basis = construct_symmetric_basis(2, ELL)
    for perm in itertools.permutations(basis.vectors):
        assert is_symmetric_basis(basis.form, perm)


def test_is_symmetric_basis_rejections():
    form = standard_form(2, ELL)
    good = list(construct_symmetric_basis(2, ELL).vectors)
    assert is_symmetric_basis(form, [GF2Vector(v, 4) for v in good])
    assert not is_symmetric_basis(form, [1, 2, 4, 8])
    assert not is_symmetric_basis(form, good[:3] + [good[0]])
    with pytest.raises(ValueError):
        is_symmetric_basis(form, good[:3])
    with pytest.raises(ValueError):
        is_symmetric_basis(form, [GF2Vector(1, 6)] * 4)
    with pytest.raises(ValueError):
        SymmetricBasis(form, (1, 2, 4, 8))


def test_extend_by_three_pairs_from_rank_two():
    form = standard_form(5, HYP)
    # W: the first two coordinate blocks carry no elliptic block here, so build W's basis by hand
    e1, f1, e2, f2 = 1, 2, 4, 8
    w = [e1, f1, e2 ^ e1 ^ f1, f2 ^ e1 ^ f1]  # not symmetric under the hyperbolic form
    with pytest.raises(HypothesisError):
        extend_by_three_pairs(form, w, [(16, 32), (64, 128), (256, 512)])


def _rank_three_w_inside_rank_six():
    """Symmetric basis of the rank-3 elliptic space on blocks 0, 1 and the elliptic block of rank 6."""
    small = construct_symmetric_basis(3, ELL).vectors
    move = {0: 0, 1: 1, 2: 2, 3: 3, 4: 10, 5: 11}
    return [sum(1 << move[i] for i in gf2.iter_bits(v)) for v in small]


def test_extend_by_three_pairs_grows_rank_three_to_six():
    form = standard_form(6, ELL)
    inner = _rank_three_w_inside_rank_six()
    pairs = [(1 << 2 * k, 1 << 2 * k + 1) for k in (2, 3, 4)]
    grown = extend_by_three_pairs(form, inner, pairs)
    assert is_symmetric_basis(form, grown)


def test_extend_by_three_pairs_checks_hypotheses():
    form = standard_form(6, ELL)
    inner = _rank_three_w_inside_rank_six()
    with pytest.raises(HypothesisError, match="mutually orthogonal"):
        extend_by_three_pairs(form, inner, [(16, 32), (16 | 64, 128), (256, 512)])
    with pytest.raises(HypothesisError, match="not singular"):
        extend_by_three_pairs(form, inner, [(16 | 32, 32), (64, 128), (256, 512)])
    with pytest.raises(ValueError):
        extend_by_three_pairs(form, inner, [(16, 32)])
    rank_two = [1, 2, (1 << 10) ^ 3, (1 << 11) ^ 3]
    with pytest.raises(HypothesisError, match="need 1"):
        extend_by_three_pairs(form, rank_two, [(16, 32), (64, 128), (256, 512)])
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        extend_by_three_pairs(form, inner, [(16, 32), (64, 128), (256, 512)])


def test_json_and_table():
    basis = construct_symmetric_basis(2, ELL)
    data = json.loads(json.dumps(basis.to_json()))
    assert data["basis"] == ["1", "2", "7", "b"]
    table = basis.table()
    assert table.splitlines()[1].split() == ["1", "1000", "0", ".111"]
