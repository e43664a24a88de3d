"""Candidate extremal constructions: Ex(m, H), G₀(F) and the Q graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..families import INF, FamilyError, FamilySpec, derive_families
from ..graphs import Graph, GraphError, canonical_form, canonical_graph, disjoint_union, graph6_encode, join
from ..graphs.atlas import empty, matching, path


class LemmaViolation(AssertionError):
    """A construction that should be F-free is not."""


@dataclass(frozen=True)
class CandidateSet:
    graphs: tuple[Graph, ...]  # canonical representatives in canonical-text order
    provenance: tuple[str, ...]

    @classmethod
    def build(cls, items: Iterable[tuple[Graph, str]]) -> CandidateSet:
        by_text: dict[str, tuple[Graph, str]] = {}
        for g, why in items:
            by_text.setdefault(canonical_form(g).text, (canonical_graph(g), why))
        keys = sorted(by_text)
        orders = {by_text[k][0].order for k in keys}
        if len(orders) > 1:
            raise GraphError(f"candidate graphs of mixed orders {sorted(orders)}")
        return cls(tuple(by_text[k][0] for k in keys), tuple(by_text[k][1] for k in keys))

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    @property
    def edges(self) -> int | None:
        return self.graphs[0].num_edges if self.graphs else None

    def graph6(self) -> list[str]:
        return [graph6_encode(g) for g in self.graphs]

    def keys(self) -> set[bytes]:
        return {canonical_form(g).bytes for g in self.graphs}


def small_ex(m: int, h: Iterable[Graph] | FamilySpec) -> CandidateSet:
    """All maximum-edge H-free graphs on ``m`` vertices, up to isomorphism."""
    from ..oracles.levels import max_free_bidirectional

    if m > 10:
        raise ValueError("small_ex supports m <= 10")
    fam = h if isinstance(h, FamilySpec) else FamilySpec.of(list(h))
    _, graphs = max_free_bidirectional(m, fam.is_free, lambda g, u, v: fam.admits_extension(g, u))
    label = f"Ex({m},{fam.describe()})"
    return CandidateSet.build((g, label) for g in graphs)


def build_G0(f: FamilySpec, n: int, *, check: bool = True) -> CandidateSet:
    """{T ∨ I_{n+1-β′} : T in Ex(β′-1, H(F))}, each checked F-free."""
    d = derive_families(f)
    bp = d.family_beta_prime
    rest = n + 1 - bp
    if rest < 0:
        raise FamilyError(f"n = {n} is too small for β′ = {bp}")
    tees = small_ex(bp - 1, d.h_family)
    items = []
    for t in tees.graphs:
        g = join(t, empty(rest))
        if check and not f.is_free(g):
            raise LemmaViolation(f"{graph6_encode(g)} in G0 is not F-free for {f.describe()}")
        items.append((g, f"T∨I_{rest} with T={graph6_encode(t)}"))
    return CandidateSet.build(items)


def build_Q(variant: int, n: int, beta_prime: int) -> Graph:
    """Q₁ = M_t ∪ I (t = ⌊m/2⌋) or Q₂ = sP₃ ∪ I (s = ⌊m/3⌋) on m = n+1-β′ vertices."""
    m = n + 1 - beta_prime
    if beta_prime == INF or m < 0:
        raise GraphError(f"need n + 1 - β′ >= 0, got n={n}, β′={beta_prime}")
    if variant == 1:
        t = m // 2
        return disjoint_union(matching(t), empty(m - 2 * t))
    if variant == 2:
        s = m // 3
        g = empty(0)
        for _ in range(s):
            g = disjoint_union(g, path(3))
        return disjoint_union(g, empty(m - 3 * s))
    raise GraphError("variant must be 1 or 2")
