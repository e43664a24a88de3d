"""Exact structural statistics: matching number, circumference, 2-colouring."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import Graph, iter_bits


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Colour classes (as masks) of a proper 2-colouring, or None if an odd cycle exists.

    In each component the smallest vertex gets colour 0.
    """
    color = [-1] * g.order
    a = b = 0
    for s in range(g.order):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    for v, c in enumerate(color):
        if c == 0:
            a |= 1 << v
        else:
            b |= 1 << v
    return a, b


def component_bipartitions(g: Graph) -> list[tuple[int, int]] | None:
    """Per-component colour classes, or None if ``g`` is not bipartite."""
    bp = bipartition(g)
    if bp is None:
        return None
    a, b = bp
    return [(comp & a, comp & b) for comp in g.components()]


def matching_number(g: Graph) -> int:
    return _matching(g.adj, (1 << g.order) - 1)


@lru_cache(maxsize=100_000)
def _matching(adj: tuple[int, ...], alive: int) -> int:
    # Some maximum matching covers any given non-isolated vertex, so we only
    # branch over the partner of a minimum-degree vertex.
    total = 0
    while True:
        best_v = -1
        best_d = 1 << 30
        for v in iter_bits(alive):
            d = (adj[v] & alive).bit_count()
            if d == 0:
                alive &= ~(1 << v)
            elif d < best_d:
                best_v, best_d = v, d
        if best_v < 0:
            return total
        if best_d == 1:
            u = (adj[best_v] & alive).bit_length() - 1
            alive &= ~((1 << best_v) | (1 << u))
            total += 1
            continue
        break
    v = best_v
    rest = alive & ~(1 << v)
    bound = (rest.bit_count() - 1) // 2
    best = 0
    for u in iter_bits(adj[v] & alive):
        val = _matching(adj, rest & ~(1 << u))
        if val > best:
            best = val
            if best >= bound:
                break
    return total + 1 + best


def _cycle_search(adj: tuple[int, ...], start: int, allowed: int, goal: int, best: int) -> int:
    """Longest cycle through ``start`` using vertices in ``allowed``.

    Stops as soon as a cycle of length >= ``goal`` is found; branches that
    cannot beat ``best`` are cut using the size of the reachable region.
    """
    found = best
    start_nbrs = adj[start] & allowed

    def reach(x: int, free: int) -> int:
        seen = 1 << x
        frontier = seen
        while frontier:
            nxt = 0
            for y in iter_bits(frontier):
                nxt |= adj[y]
            frontier = nxt & free & ~seen
            seen |= frontier
        return seen

    def dfs(x: int, visited: int, length: int) -> bool:
        nonlocal found
        free = allowed & ~visited
        if length >= 3 and length > found and adj[x] >> start & 1:
            found = length
            if found >= goal:
                return True
        region = reach(x, free)
        if not region & ~(1 << x) & start_nbrs and not (adj[x] >> start & 1):
            return False
        if length + (region & free).bit_count() <= found:
            return False
        for y in iter_bits(adj[x] & free):
            if dfs(y, visited | (1 << y), length + 1):
                return True
        return False

    dfs(start, 1 << start, 1)
    return found


def circumference(g: Graph) -> int:
    """Length of a longest cycle (0 for forests)."""
    adj = g.adj
    n = g.order
    best = 0
    allowed = (1 << n) - 1
    for s in range(n):
        # cycles whose smallest vertex is s
        if (allowed.bit_count()) <= best:
            break
        if (adj[s] & allowed).bit_count() >= 2:
            best = _cycle_search(adj, s, allowed, n + 1, best)
        allowed &= ~(1 << s)
    return best


def has_cycle_at_least(g: Graph, k: int, through: int | None = None) -> bool:
    adj = g.adj
    n = g.order
    if k < 3:
        k = 3
    if through is not None:
        if adj[through].bit_count() < 2:
            return False
        return _cycle_search(adj, through, (1 << n) - 1, k, k - 1) >= k
    allowed = (1 << n) - 1
    for s in range(n):
        if allowed.bit_count() < k:
            return False
        if (adj[s] & allowed).bit_count() >= 2 and _cycle_search(adj, s, allowed, k, k - 1) >= k:
            return True
        allowed &= ~(1 << s)
    return False


@dataclass(frozen=True)
class GraphStats:
    order: int
    edges: int
    max_degree: int
    matching_number: int
    circumference: int
    bipartition: tuple[int, int] | None  # colour classes as vertex masks

    @property
    def bipartition_sizes(self) -> tuple[int, int] | None:
        if self.bipartition is None:
            return None
        a, b = self.bipartition
        return a.bit_count(), b.bit_count()


def graph_stats(g: Graph) -> GraphStats:
    return GraphStats(
        order=g.order,
        edges=g.num_edges,
        max_degree=g.max_degree,
        matching_number=matching_number(g),
        circumference=circumference(g),
        bipartition=bipartition(g),
    )
