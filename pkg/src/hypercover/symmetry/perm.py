"""Permutations as tuples and permutation groups with stabilizer chains.

A permutation ``p`` maps point ``x`` to ``p[x]``.  Products are read left to
right: ``compose(p, q)`` applies p first, then q.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple([q[x] for x in p])


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(p: Perm, a: Perm) -> Perm:
    """a^-1 p a."""
    return compose(compose(invert(a), p), a)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def cycles(p: Perm) -> list[list[int]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(cyc)
    return out


def cycle_notation(p: Perm) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(p)) or "()"


def orbit(point: int, gens: Iterable[Perm]) -> list[int]:
    gens = list(gens)
    seen = {point}
    out = [point]
    for x in out:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


class _Level:
    """One layer of a stabilizer chain: base point, its orbit and coset representatives."""

    __slots__ = ("point", "gens", "transversal", "inverse")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {}
        self.inverse: dict[int, Perm] = {}

    def reset(self, n: int) -> None:
        ident = identity(n)
        self.transversal = {self.point: ident}
        self.inverse = {self.point: ident}
        self._grow(list(self.transversal), self.gens)

    def add_generator(self, g: Perm) -> None:
        self.gens.append(g)
        # new images only from g at first, then close under all generators
        self._grow(list(self.transversal), [g])

    def _grow(self, frontier: list[int], first_gens: list[Perm]) -> None:
        trans = self.transversal
        gens = first_gens
        while frontier:
            nxt = []
            for x in frontier:
                u = trans[x]
                for g in gens:
                    y = g[x]
                    if y not in trans:
                        v = compose(u, g)
                        trans[y] = v
                        self.inverse[y] = invert(v)
                        nxt.append(y)
            frontier = nxt
            gens = self.gens


class PermGroup:
    """Permutation group on 0..degree-1 with a base and strong generating set.

    ``order`` (if known) switches construction to a seeded random Schreier-Sims
    that stops once the chain reaches that order.  The product of the chain's
    orbit lengths never exceeds the true order, so a correct stated order gives
    an exact chain; a wrong one is caught by overshooting, stalling, or a final
    round of sifting.  Without it a deterministic Schreier-Sims is used.  ``base`` is a prefix the
    chain must start with.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Sequence[int]],
        *,
        order: int | None = None,
        base: Sequence[int] = (),
        seed: int = 0,
    ):
        self.degree = degree
        self._id = identity(degree)
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or not is_permutation(g):
                raise ValueError("generator is not a permutation of the right degree")
            if g != self._id and g not in gens:
                gens.append(g)
        self.generators: list[Perm] = gens
        self.levels: list[_Level] = []
        for b in base:
            self._append_level(b)
        if order is None:
            self._schreier_sims()
        else:
            self._random_schreier_sims(order, seed)

    # -- construction -------------------------------------------------------
    @classmethod
    def from_chain(cls, degree: int, base: Sequence[int], strong: Sequence[Perm]) -> "PermGroup":
        """Trust (base, strong) as a base and strong generating set; no sifting."""
        self = cls.__new__(cls)
        self.degree = degree
        self._id = identity(degree)
        self.generators = [tuple(g) for g in strong]
        self.levels = []
        for b in base:
            self._append_level(b)
        for g in self.generators:
            for lvl in self.levels:
                lvl.gens.append(g)
                if g[lvl.point] != lvl.point:
                    break
        for lvl in self.levels:
            lvl.reset(degree)
        return self

    def _append_level(self, point: int) -> _Level:
        lvl = _Level(point)
        lvl.reset(self.degree)
        self.levels.append(lvl)
        return lvl

    def _add_strong(self, h: Perm, depth: int) -> None:
        """h fixes the first ``depth`` base points; insert it at levels 0..depth."""
        if depth == len(self.levels):
            moved = next(x for x in range(self.degree) if h[x] != x)
            self._append_level(moved)
        for lvl in self.levels[: depth + 1]:
            lvl.add_generator(h)

    def sift(self, g: Perm) -> tuple[Perm, int]:
        """Strip g through the chain; returns the residue and the depth reached."""
        for depth, lvl in enumerate(self.levels):
            beta = g[lvl.point]
            inv = lvl.inverse.get(beta)
            if inv is None:
                return g, depth
            g = compose(g, inv)
        return g, len(self.levels)

    def _schreier_sims(self) -> None:
        for g in self.generators:
            if all(g[lvl.point] == lvl.point for lvl in self.levels):
                self._append_level(next(x for x in range(self.degree) if g[x] != x))
        for g in self.generators:
            self._add_strong_from_generator(g)
        i = len(self.levels) - 1
        while i >= 0:
            lvl = self.levels[i]
            dropped = None
            for beta in list(lvl.transversal):
                u = lvl.transversal[beta]
                for s in list(lvl.gens):
                    schreier = compose(compose(u, s), lvl.inverse[s[beta]])
                    if schreier == self._id:
                        continue
                    h, depth = self._sift_from(schreier, i + 1)
                    if h != self._id:
                        self._add_strong(h, depth)
                        dropped = depth
                        break
                if dropped is not None:
                    break
            if dropped is not None:
                i = dropped
            else:
                i -= 1

    def _add_strong_from_generator(self, g: Perm) -> None:
        depth = 0
        while depth < len(self.levels) and g[self.levels[depth].point] == self.levels[depth].point:
            depth += 1
        for lvl in self.levels[: depth + 1]:
            if g not in lvl.gens:
                lvl.add_generator(g)

    def _sift_from(self, g: Perm, start: int) -> tuple[Perm, int]:
        for depth in range(start, len(self.levels)):
            lvl = self.levels[depth]
            inv = lvl.inverse.get(g[lvl.point])
            if inv is None:
                return g, depth
            g = compose(g, inv)
        return g, len(self.levels)

    def _random_schreier_sims(self, target: int, seed: int) -> None:
        rng = random.Random(seed)
        for g in self.generators:
            h, depth = self.sift(g)
            if h != self._id:
                self._add_strong(h, depth)
        if not self.generators:
            if target != 1:
                raise ValueError("trivial group cannot have the stated order")
            return
        slots = list(self.generators)
        while len(slots) < 10:
            slots.append(slots[len(slots) % len(self.generators)])
        acc = self._id

        def shake() -> Perm:
            nonlocal acc
            i, j = rng.sample(range(len(slots)), 2)
            slots[i] = compose(slots[i], slots[j]) if rng.random() < 0.5 else compose(slots[j], slots[i])
            acc = compose(acc, slots[i])
            return acc

        for _ in range(40):
            shake()
        stale = 0
        while self.order() < target:
            h, depth = self.sift(shake())
            if h != self._id:
                self._add_strong(h, depth)
                stale = 0
            else:
                stale += 1
                if stale > 2000:
                    raise RuntimeError(
                        f"random Schreier-Sims stalled at order {self.order()} below the stated {target}"
                    )
        if self.order() != target:
            raise ValueError(f"stated order {target} is wrong: chain reached {self.order()}")
        # a stated order that is too small can be met by a partial chain; such a
        # chain misses the generators or most random elements
        for g in self.generators + [shake() for _ in range(30)]:
            if self.sift(g)[0] != self._id:
                raise ValueError(f"stated order {target} is too small: an element does not sift through the chain")

    # -- queries ------------------------------------------------------------
    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    @property
    def strong_generators(self) -> list[Perm]:
        return list(self.levels[0].gens) if self.levels else []

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lvl.transversal) for lvl in self.levels]

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.transversal)
        return out

    def __contains__(self, g: Sequence[int]) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        h, _ = self.sift(g)
        return h == self._id

    def orbit(self, point: int) -> list[int]:
        return orbit(point, self.generators)

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_trivial(self) -> bool:
        return self.order() == 1

    def elements(self) -> Iterable[Perm]:
        """All elements, as products of transversal representatives (small groups only)."""
        def walk(depth: int, acc: Perm):
            if depth < 0:
                yield acc
                return
            for u in self.levels[depth].transversal.values():
                yield from walk(depth - 1, compose(acc, u))

        yield from walk(len(self.levels) - 1, self._id)

    def with_base(self, points: Sequence[int], seed: int = 0) -> "PermGroup":
        """Same group, rebuilt so the chain starts with ``points``."""
        return PermGroup(self.degree, self.generators, order=self.order(), base=points, seed=seed)

    def tail(self, depth: int) -> "PermGroup":
        """Pointwise stabilizer of the first ``depth`` base points, reusing the chain."""
        sub = PermGroup.__new__(PermGroup)
        sub.degree = self.degree
        sub._id = self._id
        sub.levels = self.levels[depth:]
        sub.generators = list(sub.levels[0].gens) if sub.levels else []
        return sub

    def pointwise_stabilizer(self, points: Sequence[int], seed: int = 0) -> "PermGroup":
        points = list(points)
        if self.base[: len(points)] == points:
            return self.tail(len(points))
        return self.with_base(points, seed).tail(len(points))

    def stabilizer(self, point: int, seed: int = 0) -> "PermGroup":
        return self.pointwise_stabilizer([point], seed)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order()}, gens={len(self.generators)})"
