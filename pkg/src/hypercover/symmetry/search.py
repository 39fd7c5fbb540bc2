"""Graph automorphisms by equitable partition refinement and backtracking.

The search follows the first path of the individualisation-refinement tree
to a discrete leaf, then walks back up.  At level k it looks, for every vertex
w of the target cell not already known to be in the orbit of the first-path
vertex v_k, for a leaf under (v_0, ..., v_{k-1}, w) that is an image of the first
leaf.  Every automorphism found at level k fixes v_0..v_{k-1}, so the
generators found at levels >= k generate the pointwise stabilizer of
v_0..v_{k-1}, and the group order is the product of the orbit lengths of the v_k.

Partitions are refined in an isomorphism-invariant way (cells are split by
neighbour counts and ordered by count) and every split is logged in a trace.
A node whose trace differs from the first path's trace at the same depth is
not equivalent to it and is pruned.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field

from ..cayley import Graph
from .perm import Perm, PermGroup

MAX_VERTICES = 4096


class _Partition:
    """Ordered partition: ``lab`` lists vertices, cells are runs [start, end)."""

    __slots__ = ("lab", "cellof", "cellend")

    def __init__(self, lab: list[int], cellof: list[int], cellend: list[int]):
        self.lab = lab
        self.cellof = cellof
        self.cellend = cellend

    @classmethod
    def unit(cls, n: int) -> "_Partition":
        cellend = [0] * n
        if n:
            cellend[0] = n
        return cls(list(range(n)), [0] * n, cellend)

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.cellof[:], self.cellend[:])

    def is_discrete(self) -> bool:
        n = len(self.lab)
        start = 0
        while start < n:
            end = self.cellend[start]
            if end - start > 1:
                return False
            start = end
        return True

    def target_cell(self) -> int | None:
        """Start of the first smallest non-singleton cell."""
        best = None
        best_size = None
        n = len(self.lab)
        start = 0
        while start < n:
            end = self.cellend[start]
            size = end - start
            if size > 1 and (best_size is None or size < best_size):
                best, best_size = start, size
                if size == 2:
                    break
            start = end
        return best

    def cell(self, start: int) -> list[int]:
        return self.lab[start:self.cellend[start]]

    def individualize(self, v: int) -> int:
        start = self.cellof[v]
        end = self.cellend[start]
        lab = self.lab
        i = lab.index(v, start, end)
        lab[start], lab[i] = lab[i], lab[start]
        self.cellend[start] = start + 1
        if end - start > 1:
            self.cellend[start + 1] = end
            for j in range(start + 1, end):
                self.cellof[lab[j]] = start + 1
        return start


def refine(
    nbrs: tuple[tuple[int, ...], ...],
    part: _Partition,
    splitters: list[int],
    expected: list | None = None,
) -> list | None:
    """Refine ``part`` in place to the coarsest equitable refinement.

    Returns the trace of splits, or None as soon as it departs from ``expected``.
    """
    lab, cellof, cellend = part.lab, part.cellof, part.cellend
    queue = deque(splitters)
    queued = set(splitters)
    trace: list = []
    while queue:
        s = queue.popleft()
        queued.discard(s)
        count: dict[int, int] = {}
        for v in lab[s:cellend[s]]:
            for u in nbrs[v]:
                count[u] = count.get(u, 0) + 1
        touched: dict[int, list[int]] = {}
        for u in count:
            touched.setdefault(cellof[u], []).append(u)
        for c in sorted(touched):
            e = cellend[c]
            size = e - c
            if size == 1:
                continue
            hit = touched[c]
            if len(hit) == size:
                first = count[hit[0]]
                if all(count[u] == first for u in hit):
                    continue
            groups: dict[int, list[int]] = {}
            for v in lab[c:e]:
                groups.setdefault(count.get(v, 0), []).append(v)
            keys = sorted(groups)
            record = [s, c]
            pos = c
            for k in keys:
                members = groups[k]
                end = pos + len(members)
                lab[pos:end] = members
                for v in members:
                    cellof[v] = pos
                cellend[pos] = end
                record.append((k, len(members)))
                if pos not in queued:
                    queue.append(pos)
                    queued.add(pos)
                pos = end
            record = tuple(record)
            if expected is not None:
                idx = len(trace)
                if idx >= len(expected) or expected[idx] != record:
                    return None
            trace.append(record)
    if expected is not None and len(trace) != len(expected):
        return None
    return trace


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    bad_leaves: int = 0
    seconds: float = 0.0


@dataclass
class AutomorphismResult:
    group: PermGroup
    base: list[int]
    generators: list[Perm]
    order: int
    stats: SearchStats = field(default_factory=SearchStats)


class _Search:
    def __init__(self, graph: Graph, colors: list[int] | None):
        self.graph = graph
        self.n = graph.n
        self.nbrs = graph.neighbors
        self.colors = colors
        self.stats = SearchStats()

    def root(self) -> tuple[_Partition, list]:
        n = self.n
        if self.colors is None:
            part = _Partition.unit(n)
            splitters = [0] if n else []
        else:
            # cells ordered by color value
            order = sorted(range(n), key=lambda v: (self.colors[v], v))
            lab = order
            cellof = [0] * n
            cellend = [0] * n
            splitters = []
            start = 0
            while start < n:
                end = start
                while end < n and self.colors[lab[end]] == self.colors[lab[start]]:
                    end += 1
                for j in range(start, end):
                    cellof[lab[j]] = start
                cellend[start] = end
                splitters.append(start)
                start = end
            part = _Partition(lab, cellof, cellend)
        trace = refine(self.nbrs, part, splitters)
        return part, trace

    def run(self) -> AutomorphismResult:
        t0 = time.perf_counter()
        n = self.n
        part, _ = self.root()
        # first path
        nodes: list[tuple[_Partition, int]] = []
        path: list[int] = []
        traces: list[list] = []
        while True:
            c = part.target_cell()
            if c is None:
                break
            v = min(part.cell(c))
            nodes.append((part.copy(), c))
            part.individualize(v)
            traces.append(refine(self.nbrs, part, [c]))
            path.append(v)
            self.stats.nodes += 1
        leaf = part.lab
        self.first_leaf = leaf
        self.traces = traces
        self.nodes = nodes
        depth_total = len(path)

        generators: list[tuple[int, Perm]] = []
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def absorb(gamma: Perm) -> None:
            for x in range(n):
                a, b = find(x), find(gamma[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)

        order = 1
        for level in range(depth_total - 1, -1, -1):
            node, c = nodes[level]
            v = path[level]
            failed: list[int] = []
            for w in sorted(node.cell(c)):
                if w == v:
                    continue
                rw = find(w)
                if rw == find(v) or any(find(f) == rw for f in failed):
                    continue
                gamma = self._search_below(level, w)
                if gamma is None:
                    failed.append(w)
                else:
                    generators.append((level, gamma))
                    absorb(gamma)
            rv = find(v)
            orbit_len = sum(1 for x in node.cell(c) if find(x) == rv)
            order *= orbit_len

        # chain: generator found at level k fixes path[:k]
        strong = [g for _, g in sorted(generators, key=lambda t: -t[0])]
        group = PermGroup.from_chain(n, path, strong)
        if group.order() != order:
            raise AssertionError(f"chain order {group.order()} disagrees with orbit product {order}")
        self.stats.seconds = time.perf_counter() - t0
        return AutomorphismResult(group, list(path), [g for _, g in generators], order, self.stats)

    def _leaf_map(self, lab: list[int]) -> Perm:
        gamma = [0] * self.n
        for a, b in zip(self.first_leaf, lab):
            gamma[a] = b
        return tuple(gamma)

    def _search_below(self, level: int, w: int) -> Perm | None:
        """Depth-first search under (path[:level], w) for an image of the first leaf."""
        start = self.nodes[level][0].copy()
        c = start.individualize(w)
        self.stats.nodes += 1
        if refine(self.nbrs, start, [c], self.traces[level]) is None:
            return None
        depth_total = len(self.traces)
        stack = [(start, level + 1, None)]
        while stack:
            part, depth, pending = stack.pop()
            if depth == depth_total:
                self.stats.leaves += 1
                gamma = self._leaf_map(part.lab)
                if self.graph.is_automorphism(gamma):
                    return gamma
                self.stats.bad_leaves += 1
                continue
            c = self.nodes[depth][1]
            if pending is None:
                pending = sorted(part.cell(c), reverse=True)
            if not pending:
                continue
            u = pending.pop()
            stack.append((part, depth, pending))
            child = part.copy()
            child.individualize(u)
            self.stats.nodes += 1
            if refine(self.nbrs, child, [c], self.traces[depth]) is not None:
                stack.append((child, depth + 1, None))
        return None


def automorphism_group(graph: Graph, colors: list[int] | None = None) -> AutomorphismResult:
    """Automorphism group of ``graph`` (optionally preserving a vertex colouring)."""
    if graph.n > MAX_VERTICES:
        raise ValueError(f"automorphism search limited to {MAX_VERTICES} vertices")
    if colors is not None and len(colors) != graph.n:
        raise ValueError("need one colour per vertex")
    result = _Search(graph, colors).run()
    for g in result.generators:
        if not graph.is_automorphism(g):
            raise AssertionError("emitted generator does not preserve adjacency")
    return result
