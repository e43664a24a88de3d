"""Registry of named extremal constructions from known spectral Turán results.

Each entry builds a graph from integer keyword parameters and, where the
result is about a concrete family, can also build that family so callers
can check the construction is free of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..families import FamilySpec
from ..graphs import Graph, GraphError, disjoint_union, join
from ..graphs.atlas import complete, cycle, empty, g_nrs, matching, path, turan


class UnknownTheoremError(KeyError):
    pass


class TheoremParameterError(GraphError):
    pass


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    required: tuple[str, ...]
    build: Callable[..., Graph]
    family: Callable[..., FamilySpec] | None
    summary: str
    defaults: tuple[tuple[str, Callable[..., int]], ...] = ()


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise TheoremParameterError(msg)


def _half(k: int) -> int:
    return (k + 1) // 2


def _turan_join(n: int, r: int, m: int) -> Graph:
    _need(r >= 2, "r >= 2 required")
    _need(0 <= m <= n, f"need 0 <= {m} <= n")
    return join(turan(r - 1, m), empty(n - m))


def _whm(n: int, r: int, s: int) -> Graph:
    _need(r >= 2 and s >= 1, "WHM needs r >= 2, s >= 1")
    return g_nrs(n, r, s)


def _case1(n: int, k: int, r: int) -> Graph:
    _need(k >= 3 and 2 <= r <= _half(k), "needs k >= 3 and 2 <= r <= floor((k+1)/2)")
    return _turan_join(n, r, (k - 1) // 2)


def _odd(n: int, k: int, r: int) -> Graph:
    _need(k >= 3 and k % 2 == 1, "needs odd k >= 3")
    _need(r >= _half(k) + 1, "needs r >= floor((k+1)/2) + 1")
    a = (k - 1) // 2
    _need(n >= a, "n too small")
    return join(complete(a), empty(n - a))


def _even(n: int, k: int, r: int) -> Graph:
    _need(k >= 4 and k % 2 == 0, "needs even k >= 4")
    _need(r >= _half(k) + 1, "needs r >= floor((k+1)/2) + 1")
    a = k // 2 - 1
    _need(n >= a + 2, "n too small")
    return join(complete(a), disjoint_union(complete(2), empty(n - a - 2)))


def _zl_odd(n: int, k: int, s: int) -> Graph:
    _need(s >= (k - 1) // 2, "needs s >= floor((k-1)/2)")
    return _odd(n, k, _half(k) + 1)


def _zl_even_small(n: int, k: int, s: int) -> Graph:
    _need(k >= 4 and k % 2 == 0, "needs even k >= 4")
    _need(s == k // 2 - 1, "needs s = k/2 - 1")
    a = k // 2 - 1
    _need(n >= a, "n too small")
    return join(complete(a), empty(n - a))


def _zl_even(n: int, k: int, s: int) -> Graph:
    _need(s >= k // 2, "needs s >= k/2")
    return _even(n, k, _half(k) + 1)


def _bdt_a(n: int, k: int) -> Graph:
    _need(1 <= k <= n, "needs 1 <= k <= n")
    return join(empty(k), empty(n - k))


def _bdt_b(n: int, k: int) -> Graph:
    _need(1 <= k <= n, "needs 1 <= k <= n")
    return join(complete(k), empty(n - k))


def _bdt_c(n: int, k: int) -> Graph:
    _need(k >= 1 and n >= k + 2, "needs n >= k + 2")
    return join(complete(k), disjoint_union(complete(2), empty(n - k - 2)))


def _a2_1(n: int, r: int, b: int) -> Graph:
    _need(2 <= r <= b, "needs 2 <= r <= b")
    return _turan_join(n, r, b - 1)


def _b1(n: int, t: int, r: int) -> Graph:
    _need(t >= r >= 2, "needs t >= r >= 2")
    return _turan_join(n, r, t)


def _friendship(n: int) -> Graph:
    _need(n >= 1, "needs n >= 1")
    t, rest = divmod(n - 1, 2)
    return join(complete(1), disjoint_union(matching(t), empty(rest)))


def _fam_mk(s: int, r: int, **_) -> FamilySpec:
    return FamilySpec.of([matching(s + 1), complete(r + 1)])


def _fam_kp(k: int, r: int, **_) -> FamilySpec:
    return FamilySpec.of([complete(r + 1), path(k + 1)])


def _fam_ck(k: int, r: int, **_) -> FamilySpec:
    return FamilySpec.of([complete(r + 1)], cycles_at_least=k)


def _fam_cm(k: int, s: int, **_) -> FamilySpec:
    return FamilySpec.of([matching(s + 1)], cycles_at_least=k)


def _big_r(k: int, **_) -> int:
    return _half(k) + 1


def _small_s(k: int, **_) -> int:
    return k // 2 - 1


_ENTRIES = [
    TheoremEntry("WHM", ("n", "r", "s"), _whm, _fam_mk, "G(n,r,s) for {M_{s+1}, K_{r+1}}"),
    TheoremEntry("A2-1", ("n", "r", "b"), _a2_1, None, "T_{r-1}(b-1) ∨ I_{n-b+1}"),
    TheoremEntry("A3-1", ("n", "k", "r"), _case1, _fam_kp, "T_{r-1}(⌊(k-1)/2⌋) ∨ I for {K_{r+1}, P_{k+1}}"),
    TheoremEntry("A3-odd", ("n", "k"), _odd, _fam_kp, "K_{(k-1)/2} ∨ I for {K_{r+1}, P_{k+1}}, k odd",
                 (("r", _big_r),)),
    TheoremEntry("A3-even", ("n", "k"), _even, _fam_kp, "K_{k/2-1} ∨ (K_2 ∪ I) for {K_{r+1}, P_{k+1}}, k even",
                 (("r", _big_r),)),
    TheoremEntry("A4-1", ("n", "k", "r"), _case1, _fam_ck, "T_{r-1}(⌊(k-1)/2⌋) ∨ I for {C≥k, K_{r+1}}"),
    TheoremEntry("A4-odd", ("n", "k"), _odd, _fam_ck, "K_{(k-1)/2} ∨ I for {C≥k, K_{r+1}}, k odd",
                 (("r", _big_r),)),
    TheoremEntry("A4-even", ("n", "k"), _even, _fam_ck, "K_{k/2-1} ∨ (K_2 ∪ I) for {C≥k, K_{r+1}}, k even",
                 (("r", _big_r),)),
    TheoremEntry("ZL-odd", ("n", "k", "s"), _zl_odd, _fam_cm, "K_{(k-1)/2} ∨ I for {C≥k, M_{s+1}}, k odd"),
    TheoremEntry("ZL-even-small", ("n", "k"), _zl_even_small, _fam_cm,
                 "K_{k/2-1} ∨ I_{n-k/2+1} for {C≥k, M_{k/2}}", (("s", _small_s),)),
    TheoremEntry("ZL-even", ("n", "k", "s"), _zl_even, _fam_cm, "K_{k/2-1} ∨ (K_2 ∪ I) for {C≥k, M_{s+1}}, s ≥ k/2"),
    TheoremEntry("BDT1-a", ("n", "k"), _bdt_a, None, "K_{k,n-k}"),
    TheoremEntry("BDT1-b", ("n", "k"), _bdt_b, None, "K_k ∨ I_{n-k}"),
    TheoremEntry("BDT1-c", ("n", "k"), _bdt_c, None, "K_k ∨ (K_2 ∪ I_{n-k-2})"),
    TheoremEntry("B1", ("n", "t", "r"), _b1, None, "T_{r-1}(t) ∨ I_{n-t}"),
    TheoremEntry("friendship", ("n",), _friendship, lambda **_: FamilySpec.of([cycle(4)]),
                 "K_1 ∨ (⌊(n-1)/2⌋ K_2 ∪ I_{(n-1) mod 2}) for {C_4}"),
]

THEOREMS: dict[str, TheoremEntry] = {e.tid: e for e in _ENTRIES}


def _resolve(entry: TheoremEntry, params: dict[str, int]) -> dict[str, int]:
    p = dict(params)
    missing = [k for k in entry.required if k not in p]
    if missing:
        raise TheoremParameterError(f"{entry.tid} needs parameters {', '.join(missing)}")
    for key, fn in entry.defaults:
        if key not in p:
            p[key] = fn(**p)
    known = set(entry.required) | {k for k, _ in entry.defaults}
    extra = set(p) - known
    if extra:
        raise TheoremParameterError(f"{entry.tid} does not take {', '.join(sorted(extra))}")
    return p


def theorem_construction(tid: str, **params: int) -> Graph:
    """Build the construction named ``tid``, e.g. ``theorem_construction("WHM", n=8, r=2, s=1)``."""
    if tid not in THEOREMS:
        raise UnknownTheoremError(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")
    entry = THEOREMS[tid]
    return entry.build(**_resolve(entry, params))


def theorem_family(tid: str, **params: int) -> FamilySpec | None:
    """The forbidden family the construction answers, when it is concrete."""
    if tid not in THEOREMS:
        raise UnknownTheoremError(f"unknown theorem id {tid!r}")
    entry = THEOREMS[tid]
    if entry.family is None:
        return None
    return entry.family(**_resolve(entry, params))
