"""Exact comparison of spectral radii, and the edge-rotation transform."""

from __future__ import annotations

import enum
from fractions import Fraction

from ..graphs import Graph, GraphError, bits_of, iter_bits
from . import poly
from .exact import ExactLambdaCertificate, certify_lambda
from .power import lambda_estimate

TIE_WINDOW = 1e-9


class Verdict(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.capitalize()


def compare_certificates(a: ExactLambdaCertificate, b: ExactLambdaCertificate) -> Verdict:
    """Decide λ_a versus λ_b from two isolating certificates, refining as needed."""
    width = min(a.width, b.width) or Fraction(1, 1 << 80)
    d = None
    while True:
        if a.hi < b.lo:
            return Verdict.LESS
        if b.hi < a.lo:
            return Verdict.GREATER
        if a.is_exact and b.is_exact:
            return Verdict.EQUAL  # overlapping points coincide
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if d is None:
            d = poly.gcd_poly(list(a.squarefree), list(b.squarefree))
        if poly.degree(d) > 0:
            # a common root inside both isolating intervals is both λ's
            if poly.evaluate(d, lo) == 0:
                return Verdict.EQUAL
            if poly.count_roots(poly.sturm_sequence(d), lo, hi) > 0:
                return Verdict.EQUAL
        width /= 1 << 16
        a, b = a.refine(width), b.refine(width)


def compare_lambda(g: Graph, h: Graph, lam_g: float | None = None, lam_h: float | None = None) -> Verdict:
    """Compare λ(g) with λ(h); near-ties are settled exactly."""
    x = lambda_estimate(g) if lam_g is None else lam_g
    y = lambda_estimate(h) if lam_h is None else lam_h
    if x - y > TIE_WINDOW:
        return Verdict.GREATER
    if y - x > TIE_WINDOW:
        return Verdict.LESS
    return compare_certificates(certify_lambda(g, x), certify_lambda(h, y))


def edge_rotation(g: Graph, u: int, v: int, targets) -> Graph:
    """Replace the edges v w (w in ``targets``) by u w.

    Requires ``targets`` to avoid u and lie in N(v) minus N(u).
    """
    t = targets if isinstance(targets, int) else bits_of(targets)
    n = g.order
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise GraphError("u and v must be distinct vertices of g")
    allowed = g.adj[v] & ~g.adj[u] & ~(1 << u)
    if t & ~allowed:
        raise GraphError("targets must lie in N(v) \\ (N(u) ∪ {u})")
    rows = list(g.adj)
    for w in iter_bits(t):
        rows[v] &= ~(1 << w)
        rows[w] &= ~(1 << v)
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph._trusted(n, rows)
