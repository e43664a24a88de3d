"""Eigenvector concentration diagnostic: does the Perron mass sit on a K_{β′-1,t}?"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..families import FamilyError, FamilySpec, family_numbers
from ..graphs import Graph
from ..spectral import spectral_radius


@dataclass(frozen=True)
class StabilityProbeReport:
    lam: float
    beta_prime: int
    core_set: tuple[int, ...]  # the β′-1 vertices with largest Perron entries
    t: int  # size of their common neighbourhood
    min_core_entry: float
    max_noncore_entry: float
    flags: tuple[str, ...] = ()
    perron: tuple[float, ...] = ()


def stability_probe(g: Graph, f: FamilySpec) -> StabilityProbeReport:
    """Report-only: no thresholds are applied."""
    _, bp = family_numbers(f)
    if bp == math.inf:
        raise FamilyError("β′(F) is infinite; the probe needs a degenerate family")
    bp = int(bp)
    if bp < 2:
        raise FamilyError("the probe needs β′(F) >= 2")
    flags = []
    if g.num_edges == 0:
        flags.append("no edges")
    if not f.is_free(g):
        flags.append("graph is not F-free")
    res = spectral_radius(g)
    x = res.perron
    size = bp - 1
    if size > g.order:
        raise FamilyError(f"graph has fewer than β′-1 = {size} vertices")
    ranked = sorted(range(g.order), key=lambda v: (-x[v], v))
    core = tuple(sorted(ranked[:size]))
    common = g.vertex_mask()
    for v in core:
        common &= g.adj[v]
    rest = [x[v] for v in range(g.order) if v not in core]
    return StabilityProbeReport(
        lam=res.lam,
        beta_prime=bp,
        core_set=core,
        t=common.bit_count(),
        min_core_entry=min((x[v] for v in core), default=0.0),
        max_noncore_entry=max(rest, default=0.0),
        flags=tuple(flags),
        perron=x,
    )
