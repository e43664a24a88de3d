"""Forbidden families, covering numbers and the derived families M(F), H(F).

A family is a finite set of member graphs plus, optionally, every cycle of
length at least ``k``.  The independent covering number of a non-bipartite
graph is infinite; ``INF`` (``math.inf``) stands for that and compares above
every integer.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .graphs import (
    Graph,
    canonical_form,
    canonical_graph,
    component_bipartitions,
    contains_subgraph,
    graph6_decode,
    graph6_encode,
    has_cycle_at_least,
    induced_subgraph,
    iter_bits,
)
from .graphs.atlas import complete, cycle

INF = math.inf


class FamilyError(ValueError):
    pass


class FamilyFormatError(FamilyError):
    pass


# -- covering numbers -------------------------------------------------------

def is_covering(g: Graph, s: int) -> bool:
    """True iff the vertex mask ``s`` meets every edge of ``g``."""
    outside = g.vertex_mask() & ~s
    for v in iter_bits(outside):
        if g.adj[v] & outside:
            return False
    return True


def vertex_cover_number(g: Graph) -> int:
    """Minimum covering size by branch and bound on a maximum-degree vertex."""
    best = [g.order]

    def solve(alive: int, taken: int) -> None:
        if taken >= best[0]:
            return
        adj = g.adj
        # pendant vertices: cover the neighbour
        changed = True
        while changed:
            changed = False
            for v in iter_bits(alive):
                nb = adj[v] & alive
                d = nb.bit_count()
                if d == 0:
                    alive &= ~(1 << v)
                elif d == 1:
                    alive &= ~((1 << v) | nb)
                    taken += 1
                    changed = True
                    break
        if taken >= best[0]:
            return
        top_v, top_d, edges2 = -1, 0, 0
        for v in iter_bits(alive):
            d = (adj[v] & alive).bit_count()
            edges2 += d
            if d > top_d:
                top_v, top_d = v, d
        if top_d == 0:
            best[0] = taken
            return
        # each cover vertex handles at most top_d edges
        if taken + -(-(edges2 // 2) // top_d) >= best[0]:
            return
        solve(alive & ~(1 << top_v), taken + 1)
        nb = adj[top_v] & alive
        solve(alive & ~nb & ~(1 << top_v), taken + nb.bit_count())

    solve(g.vertex_mask(), 0)
    return best[0]


def independent_covering_number(g: Graph) -> int | float:
    """Smallest independent set meeting every edge; ``INF`` if ``g`` has an odd cycle.

    A connected bipartite component has a unique bipartition, and an
    independent covering must contain one whole side of every component
    with an edge, hence the sum of smaller sides.
    """
    parts = component_bipartitions(g)
    if parts is None:
        return INF
    total = 0
    for a, b in parts:
        if a.bit_count() + b.bit_count() > 1:
            total += min(a.bit_count(), b.bit_count())
    return total


def brute_independent_covering_number(g: Graph) -> int | float:
    """Exhaustive minimum over independent coverings (oracle for small orders)."""
    n = g.order
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(not (g.adj[v] & s) for v in combo) and is_covering(g, s):
                return size
    return INF


def enumerate_coverings(g: Graph, max_size: int) -> list[frozenset[int]]:
    """Every vertex subset of size ``<= max_size`` meeting all edges (not only minimal ones)."""
    out = []
    for size in range(min(max_size, g.order) + 1):
        for combo in combinations(range(g.order), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if is_covering(g, s):
                out.append(frozenset(combo))
    return out


# -- families ---------------------------------------------------------------

def _dedup(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    by_text: dict[str, Graph] = {}
    for g in graphs:
        by_text.setdefault(canonical_form(g).text, g)
    return tuple(canonical_graph(by_text[t]) for t in sorted(by_text))


@dataclass(frozen=True)
class FamilySpec:
    """Forbidden family: finite members plus optionally all cycles of length >= k.

    Members are stored as canonical relabellings, deduplicated, in canonical
    text order.
    """

    members: tuple[Graph, ...] = ()
    cycles_at_least: int | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.cycles_at_least is not None and self.cycles_at_least < 3:
            raise FamilyError("cycles_at_least must be >= 3")

    @classmethod
    def of(cls, members: Iterable[Graph] = (), cycles_at_least: int | None = None, name: str = "") -> FamilySpec:
        return cls(_dedup(members), cycles_at_least, name)

    def is_empty(self) -> bool:
        return not self.members and self.cycles_at_least is None

    def normalized(self) -> FamilySpec:
        """Drop members containing another member (F-freeness is unchanged)."""
        keep = []
        for i, f in enumerate(self.members):
            redundant = any(
                j != i and h.order <= f.order and contains_subgraph(f, h) and (
                    canonical_form(h) != canonical_form(f) or j < i)
                for j, h in enumerate(self.members)
            )
            if self.cycles_at_least is not None and has_cycle_at_least(f, self.cycles_at_least):
                redundant = True
            if not redundant:
                keep.append(f)
        return FamilySpec(tuple(keep), self.cycles_at_least, self.name)

    @property
    def is_degenerate(self) -> bool:
        if self.cycles_at_least is not None:
            return True
        return any(independent_covering_number(f) != INF for f in self.members)

    @property
    def is_weak_finite_degenerate(self) -> bool:
        """Some bipartite finite member (or cycle) attains the family's β′."""
        _, bp = family_numbers(self)
        if bp == INF:
            return False
        if self.cycles_at_least is not None and (self.cycles_at_least + 1) // 2 == bp:
            return True
        return any(independent_covering_number(f) == bp for f in self.members)

    def is_free(self, g: Graph) -> bool:
        for f in self.members:
            if contains_subgraph(g, f):
                return False
        if self.cycles_at_least is not None and has_cycle_at_least(g, self.cycles_at_least):
            return False
        return True

    def admits_extension(self, g: Graph, v: int) -> bool:
        """F-freeness of ``g`` assuming ``g - v`` (or ``g`` minus an edge at ``v``) is F-free."""
        for f in self.members:
            if contains_subgraph(g, f, through=v):
                return False
        if self.cycles_at_least is not None and has_cycle_at_least(g, self.cycles_at_least, through=v):
            return False
        return True

    def describe(self) -> str:
        parts = [graph6_encode(f) for f in self.members]
        if self.cycles_at_least is not None:
            parts.append(f"C>={self.cycles_at_least}")
        label = self.name or "family"
        return f"{label}{{{', '.join(parts)}}}"

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"name: {self.name}")
        lines += [f"member: {graph6_encode(f)}" for f in self.members]
        if self.cycles_at_least is not None:
            lines.append(f"cycles_at_least: {self.cycles_at_least}")
        return "\n".join(lines) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


def parse_family(text: str, default_name: str = "") -> FamilySpec:
    """Parse the ``key: value`` family format.

    Keys: ``name``, ``member`` (graph6 string or construction recipe such as
    ``K:4``; repeatable) and ``cycles_at_least``.  ``#`` starts a comment.
    """
    from .constructions.recipes import RecipeError, parse_recipe

    name = default_name
    members: list[Graph] = []
    cycles = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FamilyFormatError(f"line {lineno}: expected 'key: value'")
        key, value = (x.strip() for x in line.split(":", 1))
        if key == "name":
            name = value
        elif key == "member":
            try:
                members.append(parse_recipe(value) if ":" in value or "(" in value else graph6_decode(value))
            except (RecipeError, ValueError) as exc:
                raise FamilyFormatError(f"line {lineno}: bad member {value!r}: {exc}") from exc
        elif key == "cycles_at_least":
            try:
                cycles = int(value)
            except ValueError as exc:
                raise FamilyFormatError(f"line {lineno}: cycles_at_least must be an integer") from exc
        else:
            raise FamilyFormatError(f"line {lineno}: unknown key {key!r}")
    try:
        fam = FamilySpec.of(members, cycles, name)
    except FamilyError as exc:
        raise FamilyFormatError(str(exc)) from exc
    if fam.is_empty():
        raise FamilyFormatError("family has no members")
    return fam


def load_family(path: str | Path) -> FamilySpec:
    p = Path(path)
    return parse_family(p.read_text(), default_name=p.stem)


# -- family-level numbers ---------------------------------------------------

def family_numbers(f: FamilySpec) -> tuple[int | float, int | float]:
    """(β(F), β′(F)); the cycle part contributes ⌈k/2⌉ and ⌊(k+1)/2⌋."""
    if f.is_empty():
        raise FamilyError("family must be nonempty")
    betas: list[int | float] = [vertex_cover_number(m) for m in f.members]
    primes: list[int | float] = [independent_covering_number(m) for m in f.members]
    if f.cycles_at_least is not None:
        k = f.cycles_at_least
        betas.append((k + 1) // 2)
        primes.append((k + 1) // 2)
    return min(betas), min(primes)


def cycle_numbers_by_enumeration(k: int, extra: int = 3) -> tuple[int | float, int | float]:
    """β and β′ of {C_k, ..., C_{k+extra}} computed member by member."""
    cycles = [cycle(m) for m in range(k, k + extra + 1)]
    return min(vertex_cover_number(c) for c in cycles), min(independent_covering_number(c) for c in cycles)


@dataclass(frozen=True)
class DerivedFamilies:
    family_beta: int
    family_beta_prime: int
    m_family: tuple[Graph, ...]
    h_family: tuple[Graph, ...]
    full_vertex_members: tuple[Graph, ...] = ()  # members of M(F) only reached with S = V(F)


def derive_families(f: FamilySpec, verify_cycles: bool = False) -> DerivedFamilies:
    """β(F), β′(F), M(F) and H(F).

    M(F) collects F[S] over finite members F and every covering S with
    |S| < β′(F), including non-minimal ones and S = V(F).  Cycles of length
    m >= k never contribute: a covering of C_m has at least ⌈m/2⌉ >= β′(F)
    vertices.
    """
    beta, bp = family_numbers(f)
    if bp == INF:
        raise FamilyError("family has no bipartite member (not degenerate); β′ is infinite")
    if bp < 2:
        raise FamilyError(f"β′(F) = {bp} < 2; a star is forbidden")
    if verify_cycles and f.cycles_at_least is not None:
        k = f.cycles_at_least
        for m in range(k, k + 4):
            if enumerate_coverings(cycle(m), bp - 1):
                raise AssertionError(f"C_{m} has a covering smaller than β′(F) = {bp}")
    induced: list[Graph] = []
    full_only: dict[str, Graph] = {}
    partial: set[str] = set()
    for member in f.members:
        for s in enumerate_coverings(member, bp - 1):
            sub = induced_subgraph(member, s)
            induced.append(sub)
            text = canonical_form(sub).text
            if len(s) == member.order:
                full_only.setdefault(text, sub)
            else:
                partial.add(text)
    m_family = _dedup(induced)
    h_family = (complete(bp),) if beta == bp else m_family
    flagged = _dedup(g for t, g in full_only.items() if t not in partial)
    return DerivedFamilies(int(beta), int(bp), m_family, h_family, flagged)
