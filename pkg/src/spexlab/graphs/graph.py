"""Simple undirected graphs stored as per-vertex neighbour bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex arguments."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..order-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    Equality is labelled equality; use :func:`spexlab.graphs.is_isomorphic`
    for structural comparison.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match order")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside the graph")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- construction -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, rows: Iterable[int]) -> Graph:
        # skips validation; callers guarantee symmetry and no loops
        g = object.__new__(cls)
        object.__setattr__(g, "order", n)
        object.__setattr__(g, "adj", tuple(rows))
        return g

    # -- queries ------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        n = self.order
        for u in range(n):
            missing = ~self.adj[u] & ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
            for v in iter_bits(missing):
                out.append((u, v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.order):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return self.order <= 1 or len(self.components()) == 1

    # -- derived graphs -----------------------------------------------------

    def with_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.order and 0 <= v < self.order):
            raise GraphError(f"cannot add edge ({u}, {v})")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.order, rows)

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(self.order, rows)

    def relabel(self, perm: list[int] | tuple[int, ...]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise GraphError("relabelling is not a permutation")
        rows = [0] * n
        for v, row in enumerate(self.adj):
            m = 0
            for u in iter_bits(row):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return Graph._trusted(n, rows)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def join(g: Graph, h: Graph) -> Graph:
    """``g`` on vertices ``0..|g|-1``, ``h`` shifted after it, all cross edges added."""
    n, m = g.order, h.order
    if n + m > MAX_ORDER:
        raise GraphError(f"join order {n + m} exceeds {MAX_ORDER}")
    g_all, h_all = (1 << n) - 1, ((1 << m) - 1) << n
    rows = [row | h_all for row in g.adj] + [(row << n) | g_all for row in h.adj]
    return Graph._trusted(n + m, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n, m = g.order, h.order
    if n + m > MAX_ORDER:
        raise GraphError(f"union order {n + m} exceeds {MAX_ORDER}")
    return Graph._trusted(n + m, list(g.adj) + [row << n for row in h.adj])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabelled in increasing vertex order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
    index = {v: i for i, v in enumerate(vs)}
    keep = bits_of(vs)
    rows = []
    for v in vs:
        m = 0
        for u in iter_bits(g.adj[v] & keep):
            m |= 1 << index[u]
        rows.append(m)
    return Graph._trusted(len(vs), rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    return Graph._trusted(g.order, [(~row & full) & ~(1 << v) for v, row in enumerate(g.adj)])


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.order)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
