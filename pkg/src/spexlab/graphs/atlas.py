"""Named graph builders with fixed vertex labellings.

Labelling conventions (relied on by tests and reports):

* ``P:k`` is the path 0-1-...-(k-1); ``C:k`` closes it with (k-1)-0.
* ``M:s`` has edges (0,1), (2,3), ..., (2s-2, 2s-1).
* ``S:m`` is the star K_{1,m-1} with centre 0.
* Multipartite builders number parts consecutively, larger parts first
  (``G:n,r,s`` puts the part of order n-s first).
* ``join`` places the left operand's vertices first.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError, disjoint_union, join


class UnknownBuilderError(GraphError):
    pass


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    return Graph.empty(n)


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def matching(s: int) -> Graph:
    return Graph.from_edges(2 * s, [(2 * i, 2 * i + 1) for i in range(s)])


def star(m: int) -> Graph:
    """S_m = K_{1, m-1}: m vertices, centre 0."""
    if m < 1:
        raise GraphError("a star needs at least one vertex")
    return Graph.from_edges(m, [(0, i) for i in range(1, m)])


def complete_multipartite(sizes: list[int]) -> Graph:
    g = Graph.empty(0)
    for size in sizes:
        if size < 0:
            raise GraphError("negative part size")
        g = join(g, Graph.empty(size))
    return g


def turan(r: int, n: int) -> Graph:
    if r < 1:
        raise GraphError("Turán graph needs r >= 1")
    q, rem = divmod(n, r)
    return complete_multipartite([q + 1] * rem + [q] * (r - rem))


def g_nrs(n: int, r: int, s: int) -> Graph:
    """Complete r-partite graph: one part of order n-s, s split evenly over the rest."""
    if r < 2 or not 0 <= s <= n:
        raise GraphError(f"G(n,r,s) needs r >= 2 and 0 <= s <= n, got n={n} r={r} s={s}")
    q, rem = divmod(s, r - 1)
    return complete_multipartite([n - s] + [q + 1] * rem + [q] * (r - 1 - rem))


def friendship(t: int) -> Graph:
    """K_1 joined to t disjoint edges."""
    return join(complete(1), matching(t))


def clique_join_edge(k: int, n: int) -> Graph:
    """K_k ∨ (K_2 ∪ I_{n-k-2})."""
    if n - k - 2 < 0:
        raise GraphError(f"K_k ∨ (K_2 ∪ I_(n-k-2)) needs n >= k+2, got k={k} n={n}")
    return join(complete(k), disjoint_union(complete(2), Graph.empty(n - k - 2)))


def _complete_or_bipartite(*p: int) -> Graph:
    if len(p) == 1:
        return complete(p[0])
    return complete_multipartite(list(p))


_BUILDERS = {
    "K": (_complete_or_bipartite, (1, 2)),
    "I": (empty, (1,)),
    "P": (path, (1,)),
    "C": (cycle, (1,)),
    "M": (matching, (1,)),
    "S": (star, (1,)),
    "T": (turan, (2,)),
    "G": (g_nrs, (3,)),
    "Fr": (friendship, (1,)),
    "KK2I": (clique_join_edge, (2,)),
    "Kmulti": (lambda *p: complete_multipartite(list(p)), tuple(range(1, MAX_ORDER + 1))),
}

BUILDER_IDS = tuple(_BUILDERS)


def _predicted_order(name: str, p: tuple[int, ...]) -> int:
    if name == "K" and len(p) == 2:
        return p[0] + p[1]
    if name == "Kmulti":
        return sum(p)
    if name == "M":
        return 2 * p[0]
    if name == "Fr":
        return 2 * p[0] + 1
    if name == "T":
        return p[1]
    if name in ("G", "KK2I"):
        return p[0] if name == "G" else p[1]
    return p[0]


def build_atlas(name: str, params: list[int] | tuple[int, ...]) -> Graph:
    """Build a named graph, e.g. ``build_atlas("T", [3, 7])`` for T_3(7)."""
    if name not in _BUILDERS:
        raise UnknownBuilderError(f"unknown builder {name!r}; known: {', '.join(BUILDER_IDS)}")
    fn, arities = _BUILDERS[name]
    p = tuple(int(x) for x in params)
    if len(p) not in arities:
        raise GraphError(f"builder {name} takes {' or '.join(map(str, arities))} parameters, got {len(p)}")
    if any(x < 0 for x in p):
        raise GraphError(f"negative parameter for builder {name}: {p}")
    if _predicted_order(name, p) > MAX_ORDER:
        raise GraphError(f"builder {name}{p} exceeds order cap {MAX_ORDER}")
    return fn(*p)
