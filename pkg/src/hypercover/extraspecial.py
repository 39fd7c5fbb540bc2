"""Extraspecial 2-groups 2^{1+2r} presented by generator squares and commutators.

Every element has a unique normal form ``z^j * g_{s1} ... g_{st}`` with
s1 < ... < st, stored as ``(center, coset)`` where bit i of ``coset`` marks g_i.
Multiplication collects the central sign produced by sorting the word
``g_{v1} g_{v2}`` back into normal form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from . import gf2
from .quadratic import DegenerateFormError, FormType, QuadraticForm, classify, standard_form

MAX_R = 16


class GroupElement(NamedTuple):
    center: int
    coset: int


@dataclass(frozen=True)
class ExtraspecialGroup:
    r: int
    gen_squares: int
    gen_commutators: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.r <= MAX_R:
            raise ValueError(f"r must be in 1..{MAX_R}, got {self.r}")
        form = QuadraticForm(2 * self.r, self.gen_squares, tuple(self.gen_commutators))
        if not form.is_nondegenerate():
            raise DegenerateFormError("generator data induces a degenerate form; not extraspecial")

    # -- basic data -------------------------------------------------------
    @property
    def rank(self) -> int:
        return 2 * self.r

    @property
    def order(self) -> int:
        return 1 << (2 * self.r + 1)

    @cached_property
    def epsilon(self) -> FormType:
        return classify(induced_form(self))

    @cached_property
    def is_symmetric(self) -> bool:
        """All generators are involutions with pairwise commutator z."""
        d = self.rank
        return self.gen_squares == 0 and all(
            row == ((1 << d) - 1) & ~((1 << (i + 1)) - 1) for i, row in enumerate(self.gen_commutators)
        )

    identity = GroupElement(0, 0)

    @property
    def z(self) -> GroupElement:
        return GroupElement(1, 0)

    def generator(self, i: int) -> GroupElement:
        if not 0 <= i < self.rank:
            raise IndexError(f"generator index {i} out of range")
        return GroupElement(0, 1 << i)

    def generators(self) -> list[GroupElement]:
        return [self.generator(i) for i in range(self.rank)]

    # -- element ids: center bit above the 2r coset bits --------------------
    def index(self, g: GroupElement) -> int:
        return g.center << self.rank | g.coset

    def element(self, idx: int) -> GroupElement:
        return GroupElement(idx >> self.rank & 1, idx & ((1 << self.rank) - 1))

    def elements(self) -> Iterator[GroupElement]:
        return (self.element(i) for i in range(self.order))

    def _check(self, *elements: GroupElement) -> None:
        for g in elements:
            if g.center not in (0, 1) or g.coset < 0 or g.coset >> self.rank:
                raise ValueError(f"{g} is not an element of a group with {self.rank} generators")

    # -- arithmetic ---------------------------------------------------------
    def cocycle(self, v1: int, v2: int) -> int:
        """Sign from sorting g_{v1} g_{v2}: commutators for each inversion, squares for repeats."""
        acc = (v1 & v2 & self.gen_squares).bit_count()
        comm = self.gen_commutators
        w = v2
        while w:
            low = w & -w
            acc += (v1 & comm[low.bit_length() - 1]).bit_count()
            w ^= low
        return acc & 1

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a, b)
        return GroupElement(a.center ^ b.center ^ self.cocycle(a.coset, b.coset), a.coset ^ b.coset)

    def inverse(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(a.center ^ self.cocycle(a.coset, a.coset), a.coset)

    def square(self, a: GroupElement) -> GroupElement:
        return self.multiply(a, a)

    def commutator(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """[a, b] = a^-1 b^-1 a b."""
        m = self.multiply
        return m(m(self.inverse(a), self.inverse(b)), m(a, b))

    def product(self, elements: Sequence[GroupElement]) -> GroupElement:
        out = self.identity
        for g in elements:
            out = self.multiply(out, g)
        return out

    def word(self, indices: Sequence[int]) -> GroupElement:
        """g_{i1} g_{i2} ... for zero-based generator indices."""
        return self.product([self.generator(i) for i in indices])

    def render(self, g: GroupElement) -> str:
        parts = (["z"] if g.center else []) + [f"g{i + 1}" for i in gf2.iter_bits(g.coset)]
        return "·".join(parts) or "1"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "epsilon": self.epsilon.sign,
            "gen_squares": f"{self.gen_squares:x}",
            "gen_commutators": [f"{row:x}" for row in self.gen_commutators],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ExtraspecialGroup":
        if isinstance(data, str):
            data = json.loads(data)
        group = cls(int(data["r"]), int(data["gen_squares"], 16), tuple(int(x, 16) for x in data["gen_commutators"]))
        if "epsilon" in data and FormType.parse(data["epsilon"]) is not group.epsilon:
            raise ValueError("stated epsilon does not match the generator data")
        return group


def from_symmetric_generators(r: int) -> ExtraspecialGroup:
    """Involutory generators with every pairwise commutator equal to z."""
    d = 2 * r
    if not 1 <= r <= MAX_R:
        raise ValueError(f"r must be in 1..{MAX_R}, got {r}")
    full = (1 << d) - 1
    upper = tuple(full & ~((1 << (i + 1)) - 1) for i in range(d))
    return ExtraspecialGroup(r, 0, upper)


def from_standard_presentation(r: int, epsilon: FormType) -> ExtraspecialGroup:
    """Central product of D8 blocks, the last replaced by Q8 for the minus type."""
    if not 1 <= r <= MAX_R:
        raise ValueError(f"r must be in 1..{MAX_R}, got {r}")
    form = standard_form(r, epsilon)
    return ExtraspecialGroup(r, form.diag, form.upper)


def induced_form(group: ExtraspecialGroup) -> QuadraticForm:
    """Q(Zx) = x^2, B(Zx, Zy) = [x, y] on G/Z in the generator coordinates."""
    return QuadraticForm(group.rank, group.gen_squares, tuple(group.gen_commutators))


def center(group: ExtraspecialGroup) -> list[GroupElement]:
    """Center by exhaustion over all pairs; intended for small r."""
    elements = list(group.elements())
    return [a for a in elements if all(group.multiply(a, b) == group.multiply(b, a) for b in elements)]


def closure(group: ExtraspecialGroup, gens: Sequence[GroupElement]) -> set[GroupElement]:
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = group.multiply(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def sigma_tilde(group: ExtraspecialGroup, sigma: Sequence[int], g: GroupElement) -> GroupElement:
    """Relabel the generators in the normal form of g by sigma, then renormalise.

    ``sigma`` lists zero-based images: generator i goes to generator sigma[i].
    """
    if not group.is_symmetric:
        raise ValueError("sigma-tilde needs symmetric generators (involutions, all commutators z)")
    if sorted(sigma) != list(range(group.rank)):
        raise ValueError("sigma is not a permutation of the generator indices")
    group._check(g)
    out = GroupElement(g.center, 0)
    for i in gf2.iter_bits(g.coset):
        out = group.multiply(out, group.generator(sigma[i]))
    return out


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """Apply sigma first, then tau."""
    return tuple(tau[sigma[i]] for i in range(len(sigma)))


def verify_sigma_tilde_embedding(group: ExtraspecialGroup) -> EmbeddingCheck:
    """Check that sigma -> sigma-tilde embeds S_{2r} in Aut(G).

    Uses the generators (0 1) and (0 1 ... 2r-1).  For each, sigma-tilde(a g_i) =
    sigma-tilde(a) sigma-tilde(g_i) over all a and generators g_i gives the
    homomorphism property by induction on word length.
    """
    if not group.is_symmetric:
        return EmbeddingCheck(False, "group does not have symmetric generators")
    d = group.rank
    transposition = tuple([1, 0] + list(range(2, d)))
    cycle = tuple((i + 1) % d for i in range(d))
    elements = list(group.elements())
    gens = group.generators()
    for name, sigma in (("(1 2)", transposition), ("(1 ... 2r)", cycle)):
        image = {a: sigma_tilde(group, sigma, a) for a in elements}
        if len(set(image.values())) != len(elements):
            return EmbeddingCheck(False, f"sigma-tilde for {name} is not bijective")
        for a in elements:
            for s in gens:
                lhs = image[group.multiply(a, s)]
                rhs = group.multiply(image[a], image[s])
                if lhs != rhs:
                    return EmbeddingCheck(
                        False, f"{name}: image of {group.render(a)}*{group.render(s)} is not a product of images"
                    )
        if all(image[s] == s for s in gens):
            return EmbeddingCheck(False, f"sigma-tilde for {name} is trivial; map is not faithful")
    # the map is a homomorphism: (sigma tau)~ agrees with sigma~ then tau~ on generators
    for sigma, tau in product((transposition, cycle), repeat=2):
        both = _compose(sigma, tau)
        for s in gens:
            if sigma_tilde(group, both, s) != sigma_tilde(group, tau, sigma_tilde(group, sigma, s)):
                return EmbeddingCheck(False, "sigma -> sigma-tilde does not respect composition")
    return EmbeddingCheck(True)


def preimage_flip(group: ExtraspecialGroup, flips: int) -> dict[GroupElement, GroupElement]:
    """Automorphism sending g_i to z g_i for each bit i of ``flips``, as an element map.

    Shows that choosing z*g_i instead of g_i as preimage of a basis vector yields
    an isomorphic Cayley graph.  Valid whenever the flipped generators satisfy
    the same squares and commutators, which always holds since z is central
    with z^2 = 1.
    """
    images = [GroupElement(flips >> i & 1, 1 << i) for i in range(group.rank)]
    out = {}
    for g in group.elements():
        img = GroupElement(g.center, 0)
        for i in gf2.iter_bits(g.coset):
            img = group.multiply(img, images[i])
        out[g] = img
    return out


def find_isomorphism(g1: ExtraspecialGroup, g2: ExtraspecialGroup) -> list[GroupElement] | None:
    """Images in g2 of g1's generators defining an isomorphism, by backtracking.

    Images must reproduce squares and commutators and have independent cosets;
    then the map extends to a bijective homomorphism.  Small r only.
    """
    if g1.rank != g2.rank:
        return None
    d = g1.rank
    candidates = [g for g in g2.elements() if g.coset]
    z2 = g2.z

    def expected(bit: int) -> GroupElement:
        return z2 if bit else g2.identity

    def search(chosen: list[GroupElement], pivots: dict[int, int]) -> list[GroupElement] | None:
        k = len(chosen)
        if k == d:
            return chosen
        for h in candidates:
            if g2.square(h) != expected(g1.gen_squares >> k & 1):
                continue
            if any(g2.commutator(chosen[i], h) != expected(g1.gen_commutators[i] >> k & 1) for i in range(k)):
                continue
            red = gf2.reduce_vector(h.coset, pivots)
            if not red:
                continue
            child = dict(pivots)
            child[red.bit_length() - 1] = red
            found = search(chosen + [h], child)
            if found is not None:
                return found
        return None

    return search([], {})
