"""Edge-level searches over isomorphism classes.

``edge_levels_up`` adds one edge at a time to a start graph, keeping only
graphs accepted by a hereditary filter; every level is the complete set
(up to isomorphism) of accepted supergraphs of the start graph with that
many edges, because an accepted graph's subgraphs containing the start
graph are accepted too.  ``edge_levels_down`` deletes edges without any
filter.
"""

from __future__ import annotations

from typing import Callable, Iterator

from ..graphs import Graph, canonical_form
from ..graphs.canon import canonical_labeling

EdgeFilter = Callable[[Graph, int, int], bool]


def _pair_orbit_reps(g: Graph, pairs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    gens = canonical_labeling(g).generators
    if not gens:
        return pairs
    seen: set[tuple[int, int]] = set()
    reps = []
    for p in pairs:
        if p in seen:
            continue
        reps.append(p)
        stack = [p]
        seen.add(p)
        while stack:
            a, b = stack.pop()
            for gm in gens:
                x, y = gm[a], gm[b]
                q = (x, y) if x < y else (y, x)
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return reps


def _step(level: dict[bytes, Graph], up: bool, accept: EdgeFilter | None) -> dict[bytes, Graph]:
    out: dict[bytes, Graph] = {}
    for g in level.values():
        pairs = list(g.non_edges()) if up else list(g.edges())
        for u, v in _pair_orbit_reps(g, pairs):
            child = g.with_edge(u, v) if up else g.without_edge(u, v)
            if accept is not None and not accept(child, u, v):
                continue
            key = canonical_form(child).bytes
            if key not in out:
                out[key] = child
    return out


def edge_levels_up(start: Graph, accept: EdgeFilter) -> Iterator[tuple[int, dict[bytes, Graph]]]:
    """Yield (edge count, accepted classes) from the start graph upward until a level is empty."""
    level = {canonical_form(start).bytes: start}
    e = start.num_edges
    while level:
        yield e, level
        level = _step(level, True, accept)
        e += 1


def edge_levels_down(start: Graph) -> Iterator[tuple[int, dict[bytes, Graph]]]:
    level = {canonical_form(start).bytes: start}
    e = start.num_edges
    while level:
        yield e, level
        if e == 0:
            return
        level = _step(level, False, None)
        e -= 1


def max_free_supergraphs(start: Graph, accept: EdgeFilter) -> tuple[int, list[Graph], int]:
    """Maximum edge count among accepted supergraphs, its witnesses, and classes visited."""
    best_e, best, visited = start.num_edges, [start], 0
    for e, level in edge_levels_up(start, accept):
        visited += len(level)
        best_e, best = e, list(level.values())
    return best_e, best, visited


def max_free_bidirectional(m: int, is_free: Callable[[Graph], bool], accept: EdgeFilter) -> tuple[int, list[Graph]]:
    """Maximum-edge free graphs on ``m`` vertices, searching up from I_m and down from K_m.

    The side with the smaller current level is advanced; the upward side
    finishes when a level empties, the downward side when a level holds a
    free graph.
    """
    from ..graphs.atlas import complete

    empty = Graph.empty(m)
    if not is_free(empty):
        return -1, []
    up = edge_levels_up(empty, accept)
    down = edge_levels_down(complete(m))
    up_e, up_level = next(up)
    down_e, down_level = next(down)
    while True:
        free_top = [g for g in down_level.values() if is_free(g)]
        if free_top:
            return down_e, free_top
        if len(up_level) <= len(down_level):
            nxt = next(up, None)
            if nxt is None:
                return up_e, list(up_level.values())
            up_e, up_level = nxt
        else:
            down_e, down_level = next(down)
