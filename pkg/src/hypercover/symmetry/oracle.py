"""Brute-force automorphism enumeration, used as an independent check on the search."""

from __future__ import annotations

from ..cayley import Graph
from .perm import Perm

MAX_BRUTE_FORCE_VERTICES = 10


def enumerate_automorphisms(graph: Graph) -> list[Perm]:
    """Every adjacency-preserving bijection, by extending partial maps vertex by vertex."""
    n = graph.n
    if n > MAX_BRUTE_FORCE_VERTICES:
        raise ValueError(f"brute-force enumeration limited to {MAX_BRUTE_FORCE_VERTICES} vertices")
    adj = graph.adj
    out: list[Perm] = []
    image = [-1] * n

    def extend(v: int, used: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in range(n):
            if used >> w & 1:
                continue
            if any((adj[v] >> u & 1) != (adj[w] >> image[u] & 1) for u in range(v)):
                continue
            image[v] = w
            extend(v + 1, used | 1 << w)
        image[v] = -1

    extend(0, 0)
    return out
