"""Non-induced subgraph containment by backtracking.

Pattern vertices are placed one at a time, each new vertex chosen to have
as many already-placed neighbours as possible so candidate sets come from
intersecting host neighbourhoods.  Candidates below the pattern degree are
dropped, and unused host twins are tried only once per step: swapping two
unused twins is a host automorphism fixing everything placed so far.
"""

from __future__ import annotations

from .graph import Graph, iter_bits
from .stats import matching_number


def _twin_classes(host: Graph) -> tuple[list[int], list[int]]:
    """Ids for open-neighbourhood and closed-neighbourhood twin classes."""
    open_id: dict[int, int] = {}
    closed_id: dict[int, int] = {}
    fo, fc = [], []
    for v, row in enumerate(host.adj):
        fo.append(open_id.setdefault(row, len(open_id)))
        fc.append(closed_id.setdefault(row | (1 << v), len(closed_id)))
    return fo, fc


def _placement_order(pattern: Graph, verts: list[int], first: int | None) -> list[int]:
    adj = pattern.adj
    remaining = set(verts)
    order: list[int] = []
    placed = 0
    while remaining:
        if first is not None and not order:
            v = first
        else:
            v = max(remaining, key=lambda u: ((adj[u] & placed).bit_count(), adj[u].bit_count(), -u))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def _degree_dominated(pattern_degs: list[int], host_degs: list[int]) -> bool:
    p = sorted(pattern_degs, reverse=True)
    h = sorted(host_degs, reverse=True)
    return all(a <= b for a, b in zip(p, h))


def contains_subgraph(host: Graph, pattern: Graph, through: int | None = None) -> bool:
    """True iff ``pattern`` embeds injectively into ``host`` preserving edges.

    With ``through`` set, only embeddings whose image contains that host
    vertex are considered (a pattern with isolated vertices can always be
    routed through it, so the plain question is asked).
    """
    if pattern.order > host.order:
        return False
    pe = pattern.num_edges
    if pe == 0:
        return True
    if pe > host.num_edges:
        return False
    pdeg = pattern.degrees()
    hdeg = host.degrees()
    if not _degree_dominated(pdeg, hdeg):
        return False
    active = [v for v in range(pattern.order) if pdeg[v]]
    has_isolated = len(active) < pattern.order
    if max(pdeg) == 1:
        return matching_number(host) >= pe
    if has_isolated:
        through = None

    hadj = host.adj
    padj = pattern.adj
    fo, fc = _twin_classes(host)
    firsts: list[int | None]
    if through is None:
        firsts = [None]
    else:
        # one start per pattern vertex orbit would do; degree filter is enough here
        firsts = [p for p in active if pdeg[p] <= hdeg[through]]
    all_mask = (1 << host.order) - 1

    for first in firsts:
        order = _placement_order(pattern, active, first)
        pos = {v: i for i, v in enumerate(order)}
        back = [[pos[u] for u in iter_bits(padj[v]) if pos[u] < i] for i, v in enumerate(order)]
        need = [pdeg[v] for v in order]
        image = [0] * len(order)
        depth = len(order)

        def place(i: int, used: int) -> bool:
            if i == depth:
                return True
            if i == 0 and first is not None:
                cand = 1 << through
            else:
                cand = all_mask & ~used
                for j in back[i]:
                    cand &= hadj[image[j]]
            tried_o: set[int] = set()
            tried_c: set[int] = set()
            d = need[i]
            for x in iter_bits(cand):
                if hdeg[x] < d:
                    continue
                if fo[x] in tried_o or fc[x] in tried_c:
                    continue
                tried_o.add(fo[x])
                tried_c.add(fc[x])
                image[i] = x
                if place(i + 1, used | (1 << x)):
                    return True
            return False

        if place(0, 0):
            return True
    return False
