"""Exhaustive extremal oracles: ex, spex, constrained ex_H and friends."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ..constructions import CandidateSet, build_G0
from ..families import FamilySpec, family_numbers
from ..graphs import (
    Graph,
    canonical_form,
    canonical_graph,
    contains_subgraph,
    disjoint_union,
    graph6_encode,
    join,
    matching_number,
)
from ..graphs.atlas import empty, matching, star
from ..spectral import ExactLambdaCertificate, Verdict, certify_lambda, compare_certificates
from ..spectral.compare import TIE_WINDOW
from .enumerate import all_graphs, check_cap, generate
from .levels import max_free_supergraphs


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    objective: str  # "edges", "lambda" or "edges_H"
    value: int | ExactLambdaCertificate | None  # None: no admissible graph
    witnesses: tuple[Graph, ...]  # canonical representatives, canonical-text order
    graphs_scanned: int
    duration: float = field(compare=False, default=0.0)

    @property
    def witness_graph6(self) -> list[str]:
        return [graph6_encode(g) for g in self.witnesses]

    def witness_keys(self) -> set[bytes]:
        return {canonical_form(g).bytes for g in self.witnesses}

    def value_text(self) -> str:
        if self.value is None:
            return "none"
        if isinstance(self.value, ExactLambdaCertificate):
            return f"{self.value.midpoint():.12f}"
        return str(self.value)

    def lambda_value(self) -> float | None:
        if isinstance(self.value, ExactLambdaCertificate):
            return self.value.midpoint()
        return None


def _canon_sorted(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    by_text = {}
    for g in graphs:
        by_text.setdefault(canonical_form(g).text, g)
    return tuple(canonical_graph(by_text[t]) for t in sorted(by_text))


def _batched_lambda(graphs: Sequence[Graph]) -> np.ndarray:
    """Largest adjacency eigenvalue of many same-order graphs at once."""
    if not graphs:
        return np.zeros(0)
    n = graphs[0].order
    if n == 0:
        return np.zeros(len(graphs))
    out = np.empty(len(graphs))
    step = 4096
    bits = 1 << np.arange(n, dtype=np.int64)
    for start in range(0, len(graphs), step):
        chunk = graphs[start:start + step]
        rows = np.array([g.adj for g in chunk], dtype=np.int64)  # (b, n)
        mats = ((rows[:, :, None] & bits[None, None, :]) != 0).astype(float)
        out[start:start + len(chunk)] = np.linalg.eigvalsh(mats)[:, -1]
    return out


def free_graphs(n: int, f: FamilySpec, *, long_run: bool = False, workers: int = 1) -> list[Graph]:
    """Every F-free class of order ``n`` (hereditary canonical augmentation)."""
    check_cap(n, long_run)
    return generate(n, keep=f, workers=workers)


def _scan_by_levels(n: int, long_run: bool, workers: int | None):
    levels: dict[int, list[Graph]] = {}
    for g in all_graphs(n, long_run=long_run, workers=workers):
        levels.setdefault(g.num_edges, []).append(g)
    return levels


def brute_ex(n: int, f: FamilySpec, *, strategy: str = "auto", long_run: bool = False,
             workers: int = 1) -> ExtremalReport:
    """ex(n, F) and all extremal graphs.

    ``pruned`` grows only F-free graphs; ``scan`` walks all classes from the
    densest edge level down and stops at the first level holding a free graph.
    """
    t0 = time.perf_counter()
    check_cap(n, long_run)
    if strategy == "auto":
        strategy = "scan" if f.cycles_at_least is not None and f.cycles_at_least >= n - 2 else "pruned"
    if strategy == "pruned":
        graphs = free_graphs(n, f, long_run=long_run, workers=workers)
        scanned = len(graphs)
        if not graphs:
            return ExtremalReport(n, "edges", None, (), 0, time.perf_counter() - t0)
        best = max(g.num_edges for g in graphs)
        wit = [g for g in graphs if g.num_edges == best]
    elif strategy == "scan":
        levels = _scan_by_levels(n, long_run, workers)
        scanned = 0
        best, wit = None, []
        for e in sorted(levels, reverse=True):
            hits = [g for g in levels[e] if f.is_free(g)]
            scanned += len(levels[e])
            if hits:
                best, wit = e, hits
                break
    else:
        raise OracleError(f"unknown strategy {strategy!r}")
    return ExtremalReport(n, "edges", best, _canon_sorted(wit), scanned, time.perf_counter() - t0)


def stanley_bound(e: int) -> float:
    """λ ≤ (√(1+8e) - 1)/2 for any graph with e edges."""
    return (math.sqrt(1 + 8 * e) - 1) / 2


def _spectral_max(graphs: Sequence[Graph], lams: np.ndarray) -> tuple[ExactLambdaCertificate | None, list[Graph]]:
    """Exact maximiser set: float pre-selection, then exact grouping in the tie window."""
    if not len(graphs):
        return None, []
    top = float(lams.max())
    close = [i for i in np.argsort(-lams, kind="stable") if lams[i] >= top - 2 * TIE_WINDOW]
    best_i = close[0]
    best_cert = certify_lambda(graphs[best_i], float(lams[best_i]))
    ties = [best_i]
    for i in close[1:]:
        cert = certify_lambda(graphs[i], float(lams[i]))
        v = compare_certificates(cert, best_cert)
        if v is Verdict.GREATER:
            best_i, best_cert, ties = i, cert, [i]
        elif v is Verdict.EQUAL:
            ties.append(i)
    # anything above the new best but outside the window was already excluded by the float top
    return best_cert, [graphs[i] for i in ties]


def brute_spex(n: int, f: FamilySpec, *, strategy: str = "auto", long_run: bool = False,
               workers: int = 1) -> ExtremalReport:
    """spex(n, F) with every maximiser, ties decided exactly."""
    t0 = time.perf_counter()
    check_cap(n, long_run)
    if strategy == "auto":
        strategy = "scan" if f.cycles_at_least is not None and f.cycles_at_least >= n - 2 else "pruned"
    if strategy == "pruned":
        graphs = free_graphs(n, f, long_run=long_run, workers=workers)
        scanned = len(graphs)
    elif strategy == "scan":
        levels = _scan_by_levels(n, long_run, workers)
        graphs, scanned = [], 0
        best_f = -1.0
        for e in sorted(levels, reverse=True):
            if stanley_bound(e) < best_f - 2 * TIE_WINDOW:
                break
            hits = [g for g in levels[e] if f.is_free(g)]
            scanned += len(levels[e])
            if hits:
                graphs.extend(hits)
                best_f = max(best_f, float(_batched_lambda(hits).max()))
    else:
        raise OracleError(f"unknown strategy {strategy!r}")
    if not graphs:
        return ExtremalReport(n, "lambda", None, (), scanned, time.perf_counter() - t0)
    lams = _batched_lambda(graphs)
    cert, wit = _spectral_max(graphs, lams)
    return ExtremalReport(n, "lambda", cert, _canon_sorted(wit), scanned, time.perf_counter() - t0)


# -- naive labelled oracles (independent cross-check for small n) ------------

def labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def naive_classes(n: int, f: FamilySpec | None = None) -> list[Graph]:
    if n > 6:
        raise OracleError("naive labelled enumeration is limited to n <= 6")
    seen: dict[str, Graph] = {}
    for g in labelled_graphs(n):
        if f is None or f.is_free(g):
            seen.setdefault(canonical_form(g).text, g)
    return [canonical_graph(seen[t]) for t in sorted(seen)]


def naive_ex(n: int, f: FamilySpec) -> ExtremalReport:
    graphs = naive_classes(n, f)
    best = max(g.num_edges for g in graphs)
    return ExtremalReport(n, "edges", best, _canon_sorted(g for g in graphs if g.num_edges == best), 1 << (n * (n - 1) // 2))


def naive_spex(n: int, f: FamilySpec) -> ExtremalReport:
    graphs = naive_classes(n, f)
    # float λ from a different routine: numpy eigvalsh per graph
    lams = np.array([float(np.linalg.eigvalsh(_dense(g))[-1]) if g.order else 0.0 for g in graphs])
    cert, wit = _spectral_max(graphs, lams)
    return ExtremalReport(n, "lambda", cert, _canon_sorted(wit), 1 << (n * (n - 1) // 2))


def _dense(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1
    return a


# -- constrained problems ---------------------------------------------------

def _pad(host: Graph, n: int) -> Graph:
    if host.order > n:
        raise OracleError(f"host order {host.order} exceeds n = {n}")
    return disjoint_union(host, empty(n - host.order)) if host.order < n else host


def brute_ex_constrained(n: int, f: FamilySpec, host: Graph, *, mode: str = "upward",
                         long_run: bool = False) -> ExtremalReport:
    """ex_H(n, F): most edges in an F-free n-vertex graph containing ``host``.

    ``upward`` grows F-free supergraphs of the fixed host copy edge by edge
    (every F-free graph containing a copy of H is, after relabelling, such a
    supergraph); ``generic`` filters the full enumeration by containment.
    """
    t0 = time.perf_counter()
    start = _pad(host, n)
    if mode == "upward":
        if n > 64:
            raise OracleError("order cap is 64")
        if not f.is_free(start):
            return ExtremalReport(n, "edges_H", None, (), 1, time.perf_counter() - t0)
        best, wit, visited = max_free_supergraphs(start, lambda g, u, v: f.admits_extension(g, u))
        return ExtremalReport(n, "edges_H", best, _canon_sorted(wit), visited, time.perf_counter() - t0)
    if mode == "generic":
        check_cap(n, long_run)
        levels = _scan_by_levels(n, long_run, None)
        scanned = 0
        for e in sorted(levels, reverse=True):
            if e < host.num_edges:
                break
            scanned += len(levels[e])
            hits = [g for g in levels[e] if contains_subgraph(g, host) and f.is_free(g)]
            if hits:
                return ExtremalReport(n, "edges_H", e, _canon_sorted(hits), scanned, time.perf_counter() - t0)
        return ExtremalReport(n, "edges_H", None, (), scanned, time.perf_counter() - t0)
    raise OracleError(f"unknown mode {mode!r}")


def build_G_family(f: FamilySpec, n: int, *, mode: str = "upward") -> CandidateSet:
    """G(F): the union over H in G₀(F) of Ex_H(n, F)."""
    items = []
    for h in build_G0(f, n).graphs:
        rep = brute_ex_constrained(n, f, h, mode=mode)
        items += [(g, f"Ex_H with H={graph6_encode(h)}") for g in rep.witnesses]
    return CandidateSet.build(items)


# -- slope and blocking pair ------------------------------------------------

ALLOWED_SLOPES = (Fraction(0), Fraction(1, 2), Fraction(2, 3))


@dataclass(frozen=True)
class SlopeEstimate:
    per_n: tuple[tuple[int, int], ...]  # (n, ex_H(n))
    offsets: tuple[int, ...]  # ex_H - e(H)
    raw_slope: Fraction
    fitted_r: Fraction | None  # None when inconclusive
    residual_bound: Fraction  # spread of offset - r n over the window

    @property
    def conclusive(self) -> bool:
        return self.fitted_r is not None


def slope_probe(f: FamilySpec, n_values: Iterable[int]) -> SlopeEstimate:
    """Classify the linear growth of ex_H(n,F) - e(H), H = K_{β′-1, n+1-β′}.

    The raw slope is the mean growth over the window; it is snapped to the
    nearest of 0, 1/2, 2/3.  The fit is accepted when the residuals
    offset(n) - r n stay within a band of width 1 (floors of r n wiggle
    by less than that) and the snapped value is within 1/(window length)
    of the raw slope.
    """
    _, bp = family_numbers(f)
    if bp == math.inf or bp < 2:
        raise OracleError("slope probe needs finite β′ >= 2")
    ns = sorted(set(n_values))
    if len(ns) < 3:
        raise OracleError("slope probe needs at least three orders")
    per_n, offsets = [], []
    for n in ns:
        h = join(empty(bp - 1), empty(n + 1 - bp))
        rep = brute_ex_constrained(n, f, h)
        if rep.value is None:
            raise OracleError(f"K_{{{bp - 1},{n + 1 - bp}}} is not F-free at n = {n}")
        per_n.append((n, rep.value))
        offsets.append(rep.value - h.num_edges)
    span = ns[-1] - ns[0]
    raw = Fraction(offsets[-1] - offsets[0], span)
    snapped = min(ALLOWED_SLOPES, key=lambda r: (abs(r - raw), r))
    residuals = [o - snapped * n for n, o in zip(ns, offsets)]
    spread = max(residuals) - min(residuals)
    ok = spread <= 1 and abs(snapped - raw) <= Fraction(1, span)
    return SlopeEstimate(tuple(per_n), tuple(offsets), raw, snapped if ok else None, spread)


def blocking_pair_search(t: int, f: FamilySpec, p_max: int = 8, q_max: int = 8) -> tuple[int, int] | None:
    """Smallest p and q with I_t ∨ M_p and I_t ∨ S_{q+1} both not F-free (each minimised on its own)."""
    def first(builder, cap):
        for x in range(1, cap + 1):
            try:
                g = join(empty(t), builder(x))
            except ValueError:
                return None
            if not f.is_free(g):
                return x
        return None

    p = first(matching, p_max)
    q = first(lambda x: star(x + 1), q_max)
    if p is None or q is None:
        return None
    return p, q


# -- bound sanity checks ----------------------------------------------------

@dataclass(frozen=True)
class BoundCheck:
    name: str
    n: int
    k: int | None
    observed: int
    bound: Fraction | int
    violations: int

    @property
    def ok(self) -> bool:
        return self.violations == 0


def erdos_gallai_checks(n: int, *, long_run: bool = False, workers: int = 1) -> list[BoundCheck]:
    """ex(n, C≥k) <= (k-1)(n-1)/2 for every 3 <= k <= n."""
    out = []
    for k in range(3, n + 1):
        rep = brute_ex(n, FamilySpec.of([], cycles_at_least=k), long_run=long_run, workers=workers)
        bound = Fraction((k - 1) * (n - 1), 2)
        out.append(BoundCheck("erdos-gallai", n, k, rep.value, bound, int(rep.value > bound)))
    return out


def chvatal_hanson_check(n: int, *, long_run: bool = False) -> BoundCheck:
    """e(G) <= ν(G)(Δ(G)+1) over every class of order n."""
    worst_gap = None
    bad = 0
    for g in all_graphs(n, long_run=long_run):
        b = matching_number(g) * (g.max_degree + 1)
        if g.num_edges > b:
            bad += 1
        gap = b - g.num_edges
        if worst_gap is None or gap < worst_gap:
            worst_gap = gap
    return BoundCheck("chvatal-hanson", n, None, worst_gap or 0, 0, bad)


def bound_checks(n: int, *, chvatal_hanson_max: int = 7, workers: int = 1, long_run: bool = False) -> list[BoundCheck]:
    rows = erdos_gallai_checks(n, long_run=long_run, workers=workers)
    if n <= chvatal_hanson_max:
        rows.append(chvatal_hanson_check(n, long_run=long_run))
    return rows
