"""Canonical labelling by individualisation-refinement.

The search tree is the usual one: refine the unit partition to an equitable
partition, individualise each vertex of the first non-singleton cell in
turn, refine again, and so on down to discrete partitions.  Each leaf gives
a relabelled adjacency code; the canonical form is the largest code.

Pruning uses automorphisms found along the way (two leaves with equal
codes) plus twin transpositions, so the generators collected at the end
generate the full automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, iter_bits
from .graph6 import graph6_encode


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells are split by the vector of neighbour counts into every current
    cell; sub-cells are ordered by that vector, which keeps the result
    isomorphism-invariant.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                key = tuple([(a & m).bit_count() for m in masks])
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                split = True
                for key in sorted(groups):
                    new.append(groups[key])
        cells = new
        if not split:
            return cells


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


def orbits_of(n: int, generators: list[tuple[int, ...]]) -> list[int]:
    """Orbit representative (smallest element) for each point."""
    uf = _UnionFind(n)
    for gen in generators:
        for i, j in enumerate(gen):
            if i != j:
                uf.union(i, j)
    return [uf.find(i) for i in range(n)]


@dataclass(frozen=True)
class CanonicalResult:
    labeling: tuple[int, ...]  # labeling[i] = original vertex placed at canonical position i
    code: tuple[int, ...]  # adjacency rows of the canonical relabelling
    generators: tuple[tuple[int, ...], ...]  # automorphisms as images of 0..n-1

    @property
    def order(self) -> int:
        return len(self.labeling)

    def orbits(self) -> list[int]:
        return orbits_of(self.order, list(self.generators))

    def canonical_graph(self) -> Graph:
        return Graph._trusted(self.order, self.code)


def _leaf_code(adj: tuple[int, ...], lab: list[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    code = []
    for v in lab:
        m = 0
        for u in iter_bits(adj[v]):
            m |= 1 << pos[u]
        code.append(m)
    return tuple(code)


def canonical_labeling(g: Graph, colors: list[int] | None = None) -> CanonicalResult:
    """Canonical labelling of ``g``; optional vertex colours must be respected.

    Colour classes are ordered by colour value before refinement.
    """
    n = g.order
    adj = g.adj
    if n == 0:
        return CanonicalResult((), (), ())
    if colors is None:
        start = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        start = [by_color[c] for c in sorted(by_color)]

    best_code: list = [None]
    best_lab: list = [None]
    seen: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
    gens: list[tuple[int, ...]] = []
    twin_uf = _UnionFind(n)

    def twins(a: int, b: int) -> bool:
        return adj[a] & ~(1 << b) == adj[b] & ~(1 << a)

    def search(cells: list[list[int]], prefix: list[int]) -> int | None:
        # returns the prefix length to unwind to after an automorphism jump
        if len(cells) == n:
            lab = [c[0] for c in cells]
            code = _leaf_code(adj, lab)
            prev = seen.get(code)
            if prev is None:
                seen[code] = (lab, prefix)
                if best_code[0] is None or code > best_code[0]:
                    best_code[0] = code
                    best_lab[0] = lab
                return None
            prev_lab, prev_prefix = prev
            gamma = [0] * n
            for i in range(n):
                gamma[prev_lab[i]] = lab[i]
            gens.append(tuple(gamma))
            c = 0
            while c < len(prefix) and prefix[c] == prev_prefix[c]:
                c += 1
            return c
        depth = len(prefix)
        ti = 0
        while len(cells[ti]) == 1:
            ti += 1
        target = cells[ti]
        explored: list[int] = []
        fixing_cache: tuple[int, list[int]] | None = None
        for v in target:
            if explored:
                skip = False
                for w in explored:
                    if twins(v, w):
                        if twin_uf.find(v) != twin_uf.find(w):
                            twin_uf.union(v, w)
                            t = list(range(n))
                            t[v], t[w] = w, v
                            gens.append(tuple(t))
                        skip = True
                        break
                if not skip and gens:
                    if fixing_cache is None or fixing_cache[0] != len(gens):
                        fixing = [gm for gm in gens if all(gm[p] == p for p in prefix)]
                        fixing_cache = (len(gens), orbits_of(n, fixing))
                    orb = fixing_cache[1]
                    ov = orb[v]
                    skip = any(orb[w] == ov for w in explored)
                if skip:
                    continue
            rest = [u for u in target if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1:]
            jump = search(refine(adj, child), prefix + [v])
            explored.append(v)
            if jump is not None and jump < depth:
                return jump
        return None

    search(refine(adj, start), [])
    return CanonicalResult(tuple(best_lab[0]), best_code[0], tuple(gens))


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical encoding: graph6 text of the canonical relabelling."""

    text: str

    @property
    def bytes(self) -> bytes:
        return self.text.encode("ascii")

    def graph(self) -> Graph:
        from .graph6 import graph6_decode

        return graph6_decode(self.text)


@lru_cache(maxsize=200_000)
def _canonical_text(order: int, adj: tuple[int, ...]) -> str:
    res = canonical_labeling(Graph._trusted(order, adj))
    return graph6_encode(res.canonical_graph())


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(_canonical_text(g.order, g.adj))


def canonical_graph(g: Graph) -> Graph:
    return Graph._trusted(g.order, canonical_labeling(g).code)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
