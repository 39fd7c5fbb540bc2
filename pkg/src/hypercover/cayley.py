"""Cayley graphs, hypercubes, quotients by the center, covers and cycle sequences.

Vertex ids of a Cayley graph are the group's element ids; for an extraspecial
group that is the (2r+1)-bit word with the center bit on top, so the quotient
map onto G/Z is a mask.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterator, Protocol, Sequence

from . import gf2
from .extraspecial import ExtraspecialGroup, GroupElement, from_symmetric_generators

MAX_GRAPH_R = 5
MAX_HYPERCUBE_DIM = 16


class FiniteGroup(Protocol):
    """What build_cayley needs from a group: element ids 0..order-1 and a product."""

    order: int
    identity: Any

    def index(self, g: Any) -> int: ...
    def element(self, idx: int) -> Any: ...
    def multiply(self, a: Any, b: Any) -> Any: ...
    def inverse(self, a: Any) -> Any: ...
    def generators(self) -> list: ...


@dataclass(frozen=True)
class CyclicGroup:
    n: int

    @property
    def order(self) -> int:
        return self.n

    identity = 0

    def index(self, g: int) -> int:
        return g % self.n

    def element(self, idx: int) -> int:
        return idx

    def multiply(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def inverse(self, a: int) -> int:
        return -a % self.n

    def generators(self) -> list[int]:
        return [1 % self.n]

    def render(self, g: int) -> str:
        return str(g)


@dataclass(frozen=True)
class ElementaryAbelianGroup:
    """(Z_2)^d with elements as bit words."""

    d: int

    @property
    def order(self) -> int:
        return 1 << self.d

    identity = 0

    def index(self, g: int) -> int:
        return g

    def element(self, idx: int) -> int:
        return idx

    def multiply(self, a: int, b: int) -> int:
        return a ^ b

    def inverse(self, a: int) -> int:
        return a

    def generators(self) -> list[int]:
        return [1 << i for i in range(self.d)]

    def render(self, g: int) -> str:
        return "".join("1" if g >> i & 1 else "0" for i in range(self.d))


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on 0..n-1 with bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]
    labels: tuple | None = None
    group: Any = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            for u in gf2.iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("need one label per vertex")

    @classmethod
    def from_edges(cls, n: int, edges, **kwargs) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), **kwargs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(gf2.iter_bits(row)) for row in self.adj)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, row in enumerate(self.adj):
            for v in gf2.iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def valency(self) -> int | None:
        """Common degree, or None if irregular."""
        degrees = {row.bit_count() for row in self.adj}
        return degrees.pop() if len(degrees) == 1 else None

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for v in gf2.iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(gf2.iter_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def is_automorphism(self, perm: Sequence[int]) -> bool:
        if len(perm) != self.n or len(set(perm)) != self.n or any(not 0 <= x < self.n for x in perm):
            return False
        adj = self.adj
        for u in range(self.n):
            image = 0
            for v in gf2.iter_bits(adj[u]):
                image |= 1 << perm[v]
            if image != adj[perm[u]]:
                return False
        return True

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


class NotGeneratingError(ValueError):
    def __init__(self, component: list[int]):
        self.component = component
        super().__init__(
            f"connection set does not generate the group: component of the identity has {len(component)} vertices"
        )


def build_cayley(group: FiniteGroup, connection: Sequence) -> Graph:
    """Cay(G, S) with edges {g, s g}."""
    if isinstance(group, ExtraspecialGroup) and group.r > MAX_GRAPH_R:
        raise ValueError(f"graph construction limited to r <= {MAX_GRAPH_R}")
    conn = list(dict.fromkeys(connection))
    if group.identity in conn:
        raise ValueError("connection set contains the identity")
    conn_set = set(conn)
    for s in conn:
        if group.inverse(s) not in conn_set:
            raise ValueError(f"connection set is not inverse-closed: missing inverse of {s!r}")
    n = group.order
    labels = tuple(group.element(i) for i in range(n))
    index = group.index
    mult = group.multiply
    adj = []
    for g in labels:
        row = 0
        for s in conn:
            row |= 1 << index(mult(s, g))
        adj.append(row)
    graph = Graph(n, tuple(adj), labels=labels, group=group)
    comps = graph.components()
    if len(comps) > 1:
        raise NotGeneratingError(next(c for c in comps if 0 in c))
    return graph


def symmetric_cayley_graph(r: int) -> Graph:
    """The graph Cay(G, {g_1, ..., g_2r}) on the extraspecial group with symmetric generators."""
    group = from_symmetric_generators(r)
    return build_cayley(group, group.generators())


def hypercube(d: int) -> Graph:
    if not 1 <= d <= MAX_HYPERCUBE_DIM:
        raise ValueError(f"hypercube dimension must be in 1..{MAX_HYPERCUBE_DIM}")
    group = ElementaryAbelianGroup(d)
    return build_cayley(group, group.generators())


def cycle_graph(n: int) -> Graph:
    return build_cayley(CyclicGroup(n), [1, n - 1]) if n > 2 else Graph.from_edges(n, [(0, 1)] if n == 2 else [])


def quotient(graph: Graph, fiber_of: Sequence[int], nparts: int, labels=None) -> Graph:
    """Quotient graph: parts adjacent iff some edge joins them (edges inside a part are dropped)."""
    adj = [0] * nparts
    for u, v in graph.edges():
        a, b = fiber_of[u], fiber_of[v]
        if a != b:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return Graph(nparts, tuple(adj), labels=labels)


def center_fibers(group: ExtraspecialGroup) -> list[list[int]]:
    """Z-orbits {g, zg}, indexed by the coset word."""
    top = 1 << group.rank
    return [[c, c | top] for c in range(top)]


def quotient_by_center(group: ExtraspecialGroup, graph: Graph) -> Graph:
    if graph.labels is None:
        raise ValueError("quotient by the center needs a vertex-labelled Cayley graph")
    mask = (1 << group.rank) - 1
    fiber_of = [group.index(g) & mask for g in graph.labels]
    return quotient(graph, fiber_of, 1 << group.rank, labels=tuple(range(1 << group.rank)))


def hypercube_isomorphism(group: ExtraspecialGroup, connection: Sequence[GroupElement], quot: Graph) -> list[int]:
    """Explicit isomorphism quot -> hypercube(2r), from coordinates in the basis of S-cosets.

    Raises ValueError if the S-cosets are not a basis or the map fails to preserve edges.
    """
    basis = [s.coset for s in connection]
    if len(basis) != group.rank or not gf2.is_independent(basis):
        raise ValueError("cosets of the connection set are not a basis of G/Z")
    phi = [gf2.solve_coordinates(basis, c) for c in range(1 << group.rank)]
    cube = hypercube(group.rank)
    if quot.relabel(phi) != cube:
        raise ValueError("coset coordinates do not give a hypercube isomorphism")
    return phi


@dataclass(frozen=True)
class CoverReport:
    is_cover: bool
    valency: int | None
    quotient_valency: int | None
    uniform_fibers: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.is_cover


def is_cover(graph: Graph, quot: Graph, fibers: Sequence[Sequence[int]]) -> CoverReport:
    """Check that ``graph`` covers ``quot`` with the given fibers.

    Requires equal valencies and, for every vertex v and each neighbor part of
    v's part, exactly one neighbor of v in that part.
    """
    if len(fibers) != quot.n:
        raise ValueError("need one fiber per quotient vertex")
    fiber_of = [-1] * graph.n
    for idx, fib in enumerate(fibers):
        for v in fib:
            if not 0 <= v < graph.n or fiber_of[v] != -1:
                raise ValueError(f"fibers are not a partition: vertex {v} repeated or out of range")
            fiber_of[v] = idx
    if -1 in fiber_of or any(not f for f in fibers):
        raise ValueError("fibers are not a partition of the vertex set")

    k, kq = graph.valency, quot.valency
    uniform = len({len(f) for f in fibers}) == 1

    def report(ok: bool, witness: str | None = None) -> CoverReport:
        return CoverReport(ok, k, kq, uniform, witness)

    expected = quotient(graph, fiber_of, quot.n)
    if expected.adj != quot.adj:
        bad = next(i for i in range(quot.n) if expected.adj[i] != quot.adj[i])
        return report(False, f"quotient vertex {bad} has the wrong neighbours for these fibers")
    if k is None or k != kq:
        return report(False, f"valency {k} differs from quotient valency {kq}")
    for v in range(graph.n):
        counts = Counter(fiber_of[u] for u in graph.neighbors[v])
        own = fiber_of[v]
        if own in counts:
            return report(False, f"vertex {v} has a neighbour in its own fiber")
        for part in gf2.iter_bits(quot.adj[own]):
            if counts.get(part, 0) != 1:
                return report(False, f"vertex {v} has {counts.get(part, 0)} neighbours in fiber {part}")
    return report(True)


@dataclass(frozen=True)
class CycleSequence:
    cycle: tuple[int, ...]
    seq: tuple


class NotACycleError(ValueError):
    pass


def extract_cycle_sequence(graph: Graph, cycle: Sequence[int]) -> CycleSequence:
    """Generators s_i with c_{i+1} = s_i c_i (indices mod the length).

    Checks that the product s_t ... s_1 is the identity and that no involution
    appears twice in a row (cyclically).
    """
    group = graph.group
    if group is None or graph.labels is None:
        raise ValueError("cycle sequences need a group-labelled Cayley graph")
    t = len(cycle)
    if t < 3 or len(set(cycle)) != t:
        raise NotACycleError("a cycle needs at least three distinct vertices")
    for i in range(t):
        if not graph.has_edge(cycle[i], cycle[(i + 1) % t]):
            raise NotACycleError(f"vertices {cycle[i]} and {cycle[(i + 1) % t]} are not adjacent")
    labels = graph.labels
    seq = tuple(
        group.multiply(labels[cycle[(i + 1) % t]], group.inverse(labels[cycle[i]])) for i in range(t)
    )
    prod = group.identity
    for s in seq:
        prod = group.multiply(s, prod)
    if prod != group.identity:
        raise AssertionError("product of a cycle sequence is not the identity")
    for i in range(t):
        # an involution repeated would walk straight back
        if seq[i] == seq[(i + 1) % t] and group.multiply(seq[i], seq[i]) == group.identity:
            raise AssertionError("consecutive generators of a cycle sequence coincide")
    return CycleSequence(tuple(cycle), seq)


def eight_cycle(group: ExtraspecialGroup, i: int, j: int) -> list[int]:
    """Vertex ids of the 8-cycle from the identity alternating g_i, g_j (zero-based)."""
    if i == j:
        raise ValueError("the 8-cycle needs two distinct generators")
    gi, gj = group.generator(i), group.generator(j)
    c = group.identity
    out = [group.index(c)]
    for k in range(1, 8):
        c = group.multiply(gi if k % 2 else gj, c)
        out.append(group.index(c))
    return out


def even_occurrence_check(group: ExtraspecialGroup, seq: Sequence[GroupElement]) -> bool:
    """If the product of ``seq`` is central, every entry occurs an even number of times."""
    prod = group.product(seq)
    if prod.coset:
        return True
    return all(count % 2 == 0 for count in Counter(seq).values())
