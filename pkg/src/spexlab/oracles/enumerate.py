"""Isomorph-free generation of graphs by canonical vertex augmentation.

A child ``P + v`` (the new vertex ``v`` joined to a subset ``S`` of the
parent) is kept only when

* ``S`` is the smallest subset in its orbit under ``Aut(P)``, and
* ``v`` lies in the orbit of the canonical deletion vertex of the child:
  among vertices of maximum ``(degree, sum of neighbour degrees)``, the one
  placed first by the canonical labelling.

Each isomorphism class then appears exactly once.  Degree and neighbour-sum
ties are resolved without canonical labelling in the common case, which is
what keeps order 9 affordable in pure Python.

When a ``keep`` predicate describes a subgraph-closed property (F-freeness)
only surviving graphs are extended; since every graph's canonical parent is
an induced subgraph, this still yields every surviving class exactly once.
"""

from __future__ import annotations

import os
import pickle
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator, Protocol

from ..graphs.canon import canonical_labeling
from ..graphs.graph import Graph, iter_bits

DEFAULT_CAP = 9
HARD_CAP = 10
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668, 10: 12005168}


class EnumerationCapError(ValueError):
    pass


class ExtensionFilter(Protocol):
    def admits_extension(self, g: Graph, v: int) -> bool:
        """True iff ``g`` survives, given that ``g - v`` already did."""


Parent = tuple[Graph, tuple[tuple[int, ...], ...]]


def _subset_orbit_min(s: int, gens: tuple[tuple[int, ...], ...]) -> bool:
    """True iff ``s`` is the numerically smallest mask in its orbit."""
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for gm in gens:
            y = 0
            for u in iter_bits(x):
                y |= 1 << gm[u]
            if y < s:
                return False
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return True


def _children(parent: Graph, gens: tuple, keep: ExtensionFilter | None, need_gens: bool) -> list[Parent]:
    m = parent.order
    adj = parent.adj
    v = m
    vbit = 1 << m
    out: list[Parent] = []
    if m == 0:
        g = Graph._trusted(1, (0,))
        if keep is None or keep.admits_extension(g, 0):
            out.append((g, ()))
        return out
    deg = [row.bit_count() for row in adj]
    top = max(deg)
    mask_top = mask_below = 0
    for u, d in enumerate(deg):
        if d == top:
            mask_top |= 1 << u
        elif d == top - 1:
            mask_below |= 1 << u
    nbr_base = [sum(deg[w] for w in iter_bits(adj[u])) for u in range(m)]
    symmetric = bool(gens)

    for s in range(1 << m):
        k = s.bit_count()
        if s & mask_top:
            if k < top + 1:
                continue
            tied = s & mask_top if k == top + 1 else 0
        else:
            if k < top:
                continue
            tied = mask_top | (s & mask_below) if k == top else 0
        resolve = False
        if tied:
            v_sum = k
            for u in iter_bits(s):
                v_sum += deg[u]
            reject = False
            for u in iter_bits(tied):
                su = nbr_base[u] + (adj[u] & s).bit_count()
                if s >> u & 1:
                    su += k
                if su > v_sum:
                    reject = True
                    break
                if su == v_sum:
                    resolve = True
            if reject:
                continue
        if symmetric and not _subset_orbit_min(s, gens):
            continue
        rows = [row | vbit if s >> u & 1 else row for u, row in enumerate(adj)]
        rows.append(s)
        child = Graph._trusted(m + 1, rows)
        if keep is not None and not keep.admits_extension(child, v):
            continue
        res = None
        if resolve:
            res = canonical_labeling(child)
            orb = res.orbits()
            cdeg = [r.bit_count() for r in rows]
            csum = [sum(cdeg[w] for w in iter_bits(r)) for r in rows]
            key_v = (cdeg[v], csum[v])
            w = next(x for x in res.labeling if (cdeg[x], csum[x]) == key_v)
            if orb[w] != orb[v]:
                continue
        if need_gens:
            if res is None:
                res = canonical_labeling(child)
            out.append((child, res.generators))
        else:
            out.append((child, ()))
    return out


def _extend_batch(args) -> list[list[Parent]]:
    parents, keep, need_gens = args
    return [_children(g, gens, keep, need_gens) for g, gens in parents]


def _extend_level(parents: list[Parent], keep, need_gens: bool, workers: int) -> list[Parent]:
    if workers <= 1 or len(parents) < 64:
        res = [_children(g, gens, keep, need_gens) for g, gens in parents]
    else:
        chunk = max(1, len(parents) // (workers * 8))
        batches = [(parents[i:i + chunk], keep, need_gens) for i in range(0, len(parents), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            res = [kids for part in pool.map(_extend_batch, batches) for kids in part]
    return [c for kids in res for c in kids]


def default_workers() -> int:
    return os.cpu_count() or 1


def generate(n: int, keep: ExtensionFilter | None = None, workers: int = 1) -> list[Graph]:
    """All graphs of order ``n`` up to isomorphism (optionally only survivors of ``keep``)."""
    if n < 0:
        raise EnumerationCapError("order must be nonnegative")
    if n == 0:
        return [Graph.empty(0)]
    level: list[Parent] = [(Graph.empty(0), ())]
    for k in range(1, n + 1):
        level = _extend_level(level, keep, need_gens=k < n, workers=workers if k == n else 1)
        if not level:
            return []
    return [g for g, _ in level]


def _cache_dir() -> Path | None:
    env = os.environ.get("SPEXLAB_CACHE")
    if env == "":
        return None
    if env:
        return Path(env)
    return Path.home() / ".cache" / "spexlab"


_memory: dict[int, list[Graph]] = {}


def all_graphs(n: int, *, long_run: bool = False, workers: int | None = None, use_cache: bool = True) -> list[Graph]:
    """Every graph of order ``n`` up to isomorphism, memoised in process and on disk."""
    check_cap(n, long_run)
    if use_cache and n in _memory:
        return _memory[n]
    path = None
    cdir = _cache_dir() if use_cache else None
    if cdir is not None:
        path = cdir / f"graphs{n}.pkl"
        if path.exists():
            try:
                rows = pickle.loads(path.read_bytes())
            except (OSError, pickle.UnpicklingError, EOFError):
                rows = []
            if len(rows) == KNOWN_COUNTS[n]:
                graphs = [Graph._trusted(n, r) for r in rows]
                _memory[n] = graphs
                return graphs
    graphs = generate(n, workers=workers or default_workers())
    if use_cache:
        _memory[n] = graphs
        if path is not None:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_bytes(pickle.dumps([g.adj for g in graphs], protocol=pickle.HIGHEST_PROTOCOL))
                tmp.replace(path)
            except OSError:
                pass
    return graphs


def check_cap(n: int, long_run: bool = False) -> None:
    cap = HARD_CAP if long_run else DEFAULT_CAP
    if n > cap:
        hint = "" if long_run or n > HARD_CAP else " (pass long_run=True for order 10)"
        raise EnumerationCapError(f"order {n} exceeds enumeration cap {cap}{hint}")
    if n < 0:
        raise EnumerationCapError("order must be nonnegative")


def enumerate_graphs(n: int, *, long_run: bool = False, keep: ExtensionFilter | None = None,
                     workers: int | None = None) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of order ``n``."""
    check_cap(n, long_run)
    if keep is None:
        yield from all_graphs(n, long_run=long_run, workers=workers)
    else:
        yield from generate(n, keep=keep, workers=workers or 1)


