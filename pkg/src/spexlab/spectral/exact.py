"""Exact characteristic polynomials and certified largest roots."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..graphs import Graph, iter_bits
from . import poly

TARGET_WIDTH = Fraction(1, 1 << 80)  # about 8.3e-25, below the 1e-24 target


def char_poly(g: Graph) -> list[int]:
    """det(xI - A) by Faddeev–LeVerrier in exact integers, highest degree first.

    M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    A is 0/1, so row i of A·M is the sum of rows M[j] over neighbours j of i.
    """
    n = g.order
    coeffs = [1]
    nbrs = [list(iter_bits(row)) for row in g.adj]
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        am = []
        for i in range(n):
            row = [0] * n
            for j in nbrs[i]:
                mj = m[j]
                for c in range(n):
                    row[c] += mj[c]
            am.append(row)
        c_prev = coeffs[-1]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        # tr(A M_k) = sum over edges-incidence of M_k entries
        tr = 0
        for i in range(n):
            mi = m[i]
            for j in nbrs[i]:
                tr += mi[j]
        ck, rem = divmod(-tr, k)
        if rem:
            raise ArithmeticError("non-integral Faddeev–LeVerrier step")
        coeffs.append(ck)
    return coeffs


def _frac_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ExactLambdaCertificate:
    """Characteristic polynomial plus a rational interval [lo, hi] holding exactly its largest root.

    ``lo == hi`` means the root is that (integer) value exactly.  Otherwise
    the squarefree part changes sign strictly between the endpoints and has
    no root above ``lo`` except the certified one.
    """

    charpoly: tuple[int, ...]
    lo: Fraction
    hi: Fraction
    squarefree: tuple[Fraction, ...] = field(repr=False, compare=False, default=())

    @property
    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def refine(self, width: Fraction) -> ExactLambdaCertificate:
        if self.is_exact or self.width <= width:
            return self
        q = list(self.squarefree)
        lo, hi = self.lo, self.hi
        s_lo = poly.sign_at(q, lo)
        while hi - lo > width:
            mid = (lo + hi) / 2
            s = poly.sign_at(q, mid)
            if s == 0:
                lo = hi = mid
                break
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        return ExactLambdaCertificate(self.charpoly, lo, hi, self.squarefree)

    def to_text(self) -> str:
        coeffs = " ".join(str(c) for c in self.charpoly)
        return f"charpoly=[{coeffs}] interval=[{_frac_text(self.lo)},{_frac_text(self.hi)}]"

    def __float__(self) -> float:
        return self.midpoint()


def certify_lambda(g: Graph, estimate: float | None = None, width: Fraction = TARGET_WIDTH) -> ExactLambdaCertificate:
    """Isolate λ(g), the largest root of its characteristic polynomial."""
    cp = char_poly(g)
    if estimate is None:
        from .power import spectral_radius

        estimate = spectral_radius(g).lam
    n = g.order
    if n == 0 or g.num_edges == 0:
        return ExactLambdaCertificate(tuple(cp), Fraction(0), Fraction(0), (Fraction(1), Fraction(0)))
    # integer root shortcut: monic integer polynomials have no other rational roots
    r = round(estimate)
    top = Fraction(g.max_degree) + 1  # λ ≤ Δ
    q = poly.squarefree_part(cp)
    seq = poly.sturm_sequence(q)
    if abs(estimate - r) < 1e-6 and poly.evaluate(cp, r) == 0 and poly.count_roots(seq, Fraction(r), top) == 0:
        return ExactLambdaCertificate(tuple(cp), Fraction(r), Fraction(r), tuple(q))
    est = Fraction(estimate).limit_denominator(1 << 40)
    for delta in (Fraction(1, 1 << 24), Fraction(1, 1 << 10)):
        lo, hi = est - delta, min(est + delta, top)
        if (poly.count_roots(seq, lo, hi) == 1 and poly.count_roots(seq, hi, top) == 0
                and poly.sign_at(q, lo) != 0 and poly.sign_at(q, hi) != 0):
            break
    else:
        # bisect on "some root lies above mid"; invariant: λ in (lo, hi]
        lo, hi = Fraction(0), top
        while True:
            if poly.count_roots(seq, lo, hi) == 1:
                if poly.sign_at(q, hi) == 0:
                    return ExactLambdaCertificate(tuple(cp), hi, hi, tuple(q))
                if poly.sign_at(q, lo) != 0:
                    break
            mid = (lo + hi) / 2
            if poly.count_roots(seq, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
    return ExactLambdaCertificate(tuple(cp), lo, hi, tuple(q)).refine(width)
