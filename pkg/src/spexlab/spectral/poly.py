"""Dense univariate polynomials over Q, coefficients highest degree first."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list  # list[Fraction | int], highest degree first, no leading zeros (except [0])


def trim(p: Sequence) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:]) or [0]


def degree(p: Sequence) -> int:
    p = trim(p)
    return -1 if p == [0] else len(p) - 1


def evaluate(p: Sequence, x) -> Fraction | int:
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def sign_at(p: Sequence, x) -> int:
    v = evaluate(p, x)
    return (v > 0) - (v < 0)


def derivative(p: Sequence) -> list:
    d = len(p) - 1
    return trim([c * (d - i) for i, c in enumerate(p[:-1])]) if d > 0 else [0]


def divmod_poly(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(c) for c in trim(a)]
    b = [Fraction(c) for c in trim(b)]
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - db)
    r = a[:]
    lead = b[0]
    for i in range(len(q)):
        c = r[i] / lead
        q[i] = c
        if c:
            for j in range(1, db + 1):
                r[i + j] -= c * b[j]
    rem = trim(r[len(q):]) if db > 0 else [Fraction(0)]
    return trim(q), rem


def monic(p: Sequence) -> list:
    p = trim(p)
    if p == [0]:
        return p
    lead = Fraction(p[0])
    return [Fraction(c) / lead for c in p]


def gcd_poly(a: Sequence, b: Sequence) -> list:
    a, b = trim(a), trim(b)
    while b != [0]:
        _, r = divmod_poly(a, b)
        a, b = b, monic(r) if r != [0] else [0]
    return monic(a)


def squarefree_part(p: Sequence) -> list:
    g = gcd_poly(p, derivative(p))
    q, _ = divmod_poly(p, g)
    return monic(q)


def sturm_sequence(p: Sequence) -> list[list]:
    seq = [trim([Fraction(c) for c in p]), derivative([Fraction(c) for c in p])]
    while seq[-1] != [0] and degree(seq[-1]) > 0:
        _, r = divmod_poly(seq[-2], seq[-1])
        if r == [0]:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s != [0]]


def _variations(seq: list[list], x) -> int:
    count = 0
    last = 0
    for s in seq:
        v = sign_at(s, x)
        if v:
            if last and v != last:
                count += 1
            last = v
    return count


def count_roots(seq: list[list], lo, hi) -> int:
    """Distinct real roots in (lo, hi] of the polynomial whose Sturm sequence is ``seq``."""
    return _variations(seq, lo) - _variations(seq, hi)


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every real root has absolute value below it."""
    p = monic(p)
    if len(p) == 1:
        return Fraction(1)
    return 1 + max(abs(c) for c in p[1:])
