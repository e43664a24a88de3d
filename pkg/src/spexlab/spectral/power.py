"""Spectral radius and Perron vector by power iteration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..graphs import Graph, iter_bits

DEFAULT_TOL = 1e-12
MAX_ITER = 1_000_000


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    perron: tuple[float, ...]  # max entry 1; zero outside ``component``
    residual: float  # max-norm of A x - lam x
    component: int  # vertex mask of the component attaining lam

    @property
    def lambda_(self) -> float:
        return self.lam


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.order, g.order))
    for u, row in enumerate(g.adj):
        for v in iter_bits(row):
            a[u, v] = 1.0
    return a


def _power(a: np.ndarray, tol: float, max_iter: int, rng: np.random.Generator) -> tuple[float, np.ndarray, float]:
    """Perron pair of a connected adjacency block, iterating with A + I."""
    n = a.shape[0]
    x = np.ones(n)
    best_res = np.inf
    stall = 0
    lam = 0.0
    res = np.inf
    for it in range(1, max_iter + 1):
        y = a @ x + x
        x = y / y.max()
        ax = a @ x
        lam = float(x @ ax / (x @ x))
        res = float(np.abs(ax - lam * x).max())
        if res <= tol:
            return lam, x, res
        if res < best_res * 0.999:
            best_res = res
            stall = 0
        else:
            stall += 1
            if stall > 2000:
                # numerical stall: perturb and continue
                x = x + 1e-3 * rng.random(n)
                stall = 0
                best_res = np.inf
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps", res)


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER, seed: int = 0) -> SpectralResult:
    """Largest adjacency eigenvalue; the Perron vector lives on the best component."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = g.order
    if n == 0:
        return SpectralResult(0.0, (), 0.0, 0)
    rng = np.random.default_rng(seed)
    a = adjacency_matrix(g)
    best = None
    for comp in g.components():
        verts = list(iter_bits(comp))
        if len(verts) == 1:
            cand = (0.0, np.ones(1), 0.0)
        else:
            cand = _power(a[np.ix_(verts, verts)], tol, max_iter, rng)
        if best is None or cand[0] > best[0] + tol:
            best = (cand[0], cand[1], cand[2], comp, verts)
    lam, x, res, comp, verts = best
    perron = [0.0] * n
    for i, v in enumerate(verts):
        perron[v] = float(min(1.0, max(0.0, x[i])))
    return SpectralResult(lam, tuple(perron), res, comp)


def lambda_estimate(g: Graph) -> float:
    """Fast float λ via a dense symmetric eigensolver (used for bulk scans)."""
    if g.order == 0 or g.num_edges == 0:
        return 0.0
    return float(np.linalg.eigvalsh(adjacency_matrix(g))[-1])
