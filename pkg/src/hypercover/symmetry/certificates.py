"""Symmetry certificates for Cayley graphs of extraspecial 2-groups.

Everything here works on vertex permutations.  The full automorphism group
comes from the refinement search; Ĝ (right multiplications) and the σ̃-images
are built directly from the group and checked to be graph automorphisms
before use.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

from ..cayley import (
    Graph,
    center_fibers,
    eight_cycle,
    hypercube_isomorphism,
    is_cover,
    quotient_by_center,
    symmetric_cayley_graph,
)
from ..extraspecial import ExtraspecialGroup, sigma_tilde, verify_sigma_tilde_embedding
from .perm import Perm, PermGroup, conjugate, cycle_notation
from .search import automorphism_group

MAX_VERIFY_R = 4
MAX_ARC_ENUMERATION = 64


@lru_cache(maxsize=8)
def aut(graph: Graph) -> PermGroup:
    """Full automorphism group (cached per graph)."""
    return automorphism_group(graph).group


def is_vertex_transitive(graph: Graph, group: PermGroup | None = None) -> bool:
    group = group or aut(graph)
    return graph.n == 0 or len(group.orbit(0)) == graph.n


def stabilizer(group: PermGroup, v: int) -> PermGroup:
    return group.stabilizer(v)


def _check_arc_input(graph: Graph) -> int:
    k = graph.valency
    if k is None:
        raise ValueError("2-arc transitivity needs a regular graph")
    if not graph.is_connected():
        raise ValueError("2-arc transitivity needs a connected graph")
    if k < 2:
        raise ValueError("2-arc transitivity needs valency at least 2")
    return k


def two_arc_orbits(graph: Graph, group: PermGroup) -> int:
    """Number of orbits of ``group`` on 2-arcs (u, v, w), u != w, by direct enumeration."""
    nbrs = graph.neighbors
    arcs = [(u, v, w) for v in range(graph.n) for u in nbrs[v] for w in nbrs[v] if u != w]
    seen: set[tuple[int, int, int]] = set()
    count = 0
    gens = group.generators
    for arc in arcs:
        if arc in seen:
            continue
        count += 1
        seen.add(arc)
        stack = [arc]
        while stack:
            u, v, w = stack.pop()
            for g in gens:
                img = (g[u], g[v], g[w])
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
    return count


def is_two_transitive_on(points: Sequence[int], gens: Sequence[Perm]) -> bool:
    """Does the group generated by ``gens`` act 2-transitively on ``points``?"""
    points = list(points)
    if len(points) < 2:
        return True
    pts = set(points)
    for g in gens:
        if any(g[p] not in pts for p in points):
            raise ValueError("generators do not preserve the point set")
    start = (points[0], points[1])
    seen = {start}
    stack = [start]
    while stack:
        a, b = stack.pop()
        for g in gens:
            img = (g[a], g[b])
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return len(seen) == len(points) * (len(points) - 1)


def is_2_arc_transitive(graph: Graph, group: PermGroup | None = None, v: int = 0) -> bool:
    """Vertex transitivity plus 2-transitivity of the stabilizer on N(v).

    For n <= 64 the answer is cross-checked by counting orbits on 2-arcs.
    """
    _check_arc_input(graph)
    group = group or aut(graph)
    local = is_vertex_transitive(graph, group) and is_two_transitive_on(
        graph.neighbors[v], group.stabilizer(v).generators
    )
    if graph.n <= MAX_ARC_ENUMERATION:
        direct = two_arc_orbits(graph, group) == 1
        if direct != local:
            raise AssertionError(f"2-arc routes disagree: stabilizer route {local}, orbit count {direct}")
    return local


def pointwise_neighborhood_stabilizer(graph: Graph, v: int = 0, group: PermGroup | None = None) -> PermGroup:
    group = group or aut(graph)
    return group.pointwise_stabilizer([v, *graph.neighbors[v]])


# -- the regular subgroup and its normaliser ----------------------------------
def _need_labels(graph: Graph, group: Any) -> None:
    if graph.labels is None:
        raise ValueError("needs a vertex-labelled Cayley graph")
    if graph.group is not None and graph.group != group:
        raise ValueError("graph is labelled by a different group")


def right_multiplication(group: Any, graph: Graph, g: Any) -> Perm:
    """Vertex permutation x -> x g."""
    return tuple(group.index(group.multiply(x, g)) for x in graph.labels)


def right_regular_embedding(group: Any, graph: Graph, verify_all: bool = True) -> PermGroup:
    """Ĝ as a permutation group on the vertices of Cay(G, S)."""
    _need_labels(graph, group)
    elements = [group.element(i) for i in range(group.order)] if verify_all else group.generators()
    for g in elements:
        if not graph.is_automorphism(right_multiplication(group, graph, g)):
            raise AssertionError(f"right multiplication by {group.render(g)} is not an automorphism")
    gens = [right_multiplication(group, graph, g) for g in group.generators()]
    return PermGroup(graph.n, gens, order=group.order)


@dataclass(frozen=True)
class NormalityReport:
    normal: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.normal


def normalizes(sub: PermGroup, gens: Sequence[Perm]) -> NormalityReport:
    """Is ``sub`` normalised by every permutation in ``gens``?"""
    for k, a in enumerate(gens):
        for i, h in enumerate(sub.generators):
            c = conjugate(h, a)
            if c not in sub:
                return NormalityReport(False, f"conjugate of regular generator #{i} by automorphism #{k} {cycle_notation(a)} leaves the subgroup")
    return NormalityReport(True)


def is_normal_cayley(graph: Graph, group: Any, full: PermGroup | None = None) -> NormalityReport:
    """Ĝ normal in Aut(graph), by conjugating Ĝ's generators by Aut's generators."""
    hat = right_regular_embedding(group, graph)
    full = full or aut(graph)
    return normalizes(hat, full.generators)


def sigma_tilde_permutations(group: ExtraspecialGroup, graph: Graph) -> list[Perm]:
    """Vertex permutations induced by σ̃ for the transposition (1 2) and the cycle (1 2 ... 2r)."""
    _need_labels(graph, group)
    d = group.rank
    transposition = tuple([1, 0] + list(range(2, d)))
    cycle = tuple((i + 1) % d for i in range(d))
    out = []
    for sigma in (transposition, cycle):
        out.append(tuple(group.index(sigma_tilde(group, sigma, x)) for x in graph.labels))
    return out


# -- pointwise stabilizer and the 8-cycles ------------------------------------
def fixed_cycle_check(graph: Graph, group: ExtraspecialGroup, rho: Perm, i: int, j: int) -> bool:
    """Does rho (which must fix the identity vertex and its neighbours) fix the 8-cycle C_ij?"""
    rho = tuple(rho)
    if not graph.is_automorphism(rho):
        raise ValueError("rho is not an automorphism")
    one = group.index(group.identity)
    if rho[one] != one or any(rho[u] != u for u in graph.neighbors[one]):
        raise ValueError("rho does not fix the identity vertex and all of its neighbours")
    return all(rho[v] == v for v in eight_cycle(group, i, j))


# -- full verification of Γ(r) at desk scale -----------------------------------
@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    witness: str | None = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail, "witness": self.witness, "seconds": round(self.seconds, 4)}


@dataclass
class TheoremReport:
    r: int
    checks: list[CheckResult] = field(default_factory=list)
    aut_order: int | None = None
    expected_order: int = 0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "ok": self.ok,
            "aut_order": self.aut_order,
            "expected_order": self.expected_order,
            "checks": [c.to_json() for c in self.checks],
        }


CHECKS = ("regular", "cover", "sigma", "2at", "normal", "order", "stab")
CHECK_GROUPS = {
    "all": CHECKS,
    "cover": ("regular", "cover"),
    "2at": ("2at",),
    "normal": ("sigma", "normal"),
    "stab": ("stab",),
}


def expected_aut_order(r: int) -> int:
    return (1 << (2 * r + 1)) * math.factorial(2 * r)


def verify_main_theorem(r: int, checks: Sequence[str] = CHECKS, seed: int = 0) -> TheoremReport:
    """Run the requested checks on Γ(r) = Cay(G, {g_1..g_2r}) with symmetric generators.

    regular  2r-regular, connected, 2^{2r+1} vertices
    cover    Γ/Z is the 2r-cube through coset coordinates, and Γ covers it
    sigma    σ -> σ̃ embeds S_2r in Aut(G); its images are automorphisms fixing 1, 2-transitive on N(1)
    2at      2-arc transitivity (stabilizer route; orbit count too when n <= 64)
    normal   Ĝ normal in Aut(Γ); also normal in ⟨Ĝ, σ̃-images⟩ of order |G|(2r)!
    order    |Aut(Γ)| = 2^{2r+1} (2r)!
    stab     the pointwise stabilizer of 1 and N(1) is trivial, and no element of it moves z
    """
    if not 1 <= r <= MAX_VERIFY_R:
        raise ValueError(f"verification limited to 1 <= r <= {MAX_VERIFY_R}")
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    graph = symmetric_cayley_graph(r)
    group: ExtraspecialGroup = graph.group
    report = TheoremReport(r, expected_order=expected_aut_order(r))
    one = group.index(group.identity)
    state: dict[str, Any] = {}

    def full() -> PermGroup:
        if "aut" not in state:
            state["aut"] = aut(graph)
            report.aut_order = state["aut"].order()
        return state["aut"]

    def run(name: str, fn) -> None:
        t0 = time.perf_counter()
        ok, detail, witness = fn()
        report.checks.append(CheckResult(name, ok, detail, witness, time.perf_counter() - t0))

    def regular():
        n, k = graph.n, graph.valency
        ok = n == 1 << (2 * r + 1) and k == 2 * r and graph.is_connected()
        return ok, f"{n} vertices, valency {k}, connected={graph.is_connected()}", None if ok else "wrong size or valency"

    def cover():
        quot = quotient_by_center(group, graph)
        try:
            hypercube_isomorphism(group, group.generators(), quot)
        except ValueError as exc:
            return False, "quotient is not the hypercube", str(exc)
        rep = is_cover(graph, quot, center_fibers(group))
        return rep.is_cover, f"Γ/Z ≅ Q_{2 * r}; cover={rep.is_cover}", rep.witness

    def sigma():
        emb = verify_sigma_tilde_embedding(group)
        if not emb:
            return False, "σ̃ is not an embedding", emb.witness
        perms = sigma_tilde_permutations(group, graph)
        for p in perms:
            if not graph.is_automorphism(p):
                return False, "σ̃-image is not a graph automorphism", cycle_notation(p)
            if p[one] != one:
                return False, "σ̃-image moves the identity vertex", cycle_notation(p)
        if not is_two_transitive_on(graph.neighbors[one], perms):
            return False, "σ̃-images are not 2-transitive on N(1)", None
        state["sigma"] = perms
        return True, f"S_{2 * r} embeds; images fix 1 and are 2-transitive on N(1)", None

    def two_arc():
        ok = is_2_arc_transitive(graph, full(), one)
        route = "stabilizer route" + (" + 2-arc orbit count" if graph.n <= MAX_ARC_ENUMERATION else "")
        return ok, route, None if ok else "stabilizer not 2-transitive on N(1)"

    def normal():
        hat = right_regular_embedding(group, graph)
        perms = state.get("sigma") or sigma_tilde_permutations(group, graph)
        ext = PermGroup(graph.n, hat.generators + perms, order=expected_aut_order(r), seed=seed)
        local = normalizes(hat, ext.generators)
        if not local:
            return False, "Ĝ not normal in ⟨Ĝ, σ̃⟩", local.witness
        rep = normalizes(hat, full().generators)
        detail = f"Ĝ ⊴ ⟨Ĝ, σ̃⟩ (order {ext.order()}); Ĝ ⊴ Aut(Γ): {rep.normal}"
        return rep.normal, detail, rep.witness

    def order():
        got = full().order()
        ok = got == report.expected_order
        witness = None if ok else f"search found {got} automorphisms, ratio {got / report.expected_order:g} to the formula"
        return ok, f"|Aut(Γ)| = {got}, formula gives {report.expected_order}", witness

    def stab():
        kernel = pointwise_neighborhood_stabilizer(graph, one, full())
        if kernel.is_trivial():
            return True, "A_1^[1] trivial", None
        z = group.index(group.z)
        g = kernel.generators[0]
        moved_z = [h for h in kernel.generators if h[z] != z]
        witness = f"nonidentity element {cycle_notation(g)}"
        if moved_z:
            witness += f"; z -> {moved_z[0][z]}"
        return False, f"|A_1^[1]| = {kernel.order()}", witness

    table = {"regular": regular, "cover": cover, "sigma": sigma, "2at": two_arc, "normal": normal, "order": order, "stab": stab}
    for name in CHECKS:
        if name in checks:
            run(name, table[name])
    return report
