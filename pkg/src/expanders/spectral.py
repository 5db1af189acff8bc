"""Eigenvalues, Cheeger-type quantities, and sweep cuts.

Spectra are dense below :data:`DENSE_SPECTRUM_LIMIT`; above it only the
extremal pair (adjacency lambda2, normalized-Laplacian mu1) is computed
iteratively at tolerance :data:`EIG_TOL` with an explicit residual check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from . import kernels
from .graph import Graph, VertexSet, boundary

DENSE_SPECTRUM_LIMIT = 2000
DENSE_VECTOR_LIMIT = 1024
EXACT_CUT_LIMIT = 22
EIG_TOL = 1e-8
EIG_MAXITER = 100_000


class EigenConvergenceFailure(RuntimeError):
    """Iterative eigensolve failed to converge; carries the residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class ExactLimitExceeded(RuntimeError):
    """Exhaustive routine refused an oversized input; use the heuristic route."""


def adjacency_matrix(g: Graph, sparse: bool = False):
    if sparse:
        rows = [u for u, v in g.edges] + [v for u, v in g.edges]
        cols = [v for u, v in g.edges] + [u for u, v in g.edges]
        data = np.ones(2 * g.num_edges)
        return sp.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def normalized_laplacian(g: Graph, sparse: bool = False):
    """I - D^{-1/2} A D^{-1/2}, with the 0-for-isolated inverse convention."""
    deg = np.array(g.deg, dtype=float)
    inv_sqrt = np.where(deg > 0, 1.0 / np.sqrt(np.maximum(deg, 1)), 0.0)
    if sparse:
        a = adjacency_matrix(g, sparse=True)
        d = sp.diags(inv_sqrt)
        return sp.identity(g.n, format="csr") - d @ a @ d
    a = adjacency_matrix(g)
    return np.eye(g.n) - (inv_sqrt[:, None] * a) * inv_sqrt[None, :]


@dataclass(frozen=True)
class SpectralSummary:
    """Adjacency spectrum and normalized-Laplacian mu1 (dense or extremal-only)."""

    n: int
    is_regular: bool
    d: int | None
    lambda1: float
    lambda2: float | None
    mu1: float | None
    adjacency_eigenvalues: tuple[float, ...] | None
    mu_values: tuple[float, ...] | None
    dense: bool
    tol: float


def _known_kernel_vector(g: Graph) -> np.ndarray:
    """The exact 0-eigenvector of the normalized Laplacian: D^{1/2} 1."""
    v = np.sqrt(np.array(g.deg, dtype=float))
    norm = np.linalg.norm(v)
    return v / norm if norm > 0 else np.ones(g.n) / math.sqrt(g.n)


def mu1_and_vector(g: Graph, tol: float = EIG_TOL) -> tuple[float, np.ndarray]:
    """Second-smallest normalized-Laplacian eigenvalue and an eigenvector.

    Dense solve below DENSE_VECTOR_LIMIT; deterministic shift-invert Lanczos
    above, with the known kernel vector deflated from the start vector and a
    residual check. Raises EigenConvergenceFailure when the residual exceeds
    the tolerance.
    """
    if g.n < 2:
        raise ValueError("mu1 needs at least two vertices")
    if g.n <= DENSE_VECTOR_LIMIT:
        lap = normalized_laplacian(g)
        w, vecs = np.linalg.eigh(lap)
        return float(w[1]), vecs[:, 1]
    lap = normalized_laplacian(g, sparse=True).tocsc()
    phi0 = _known_kernel_vector(g)
    v0 = np.cos(np.arange(g.n) * 0.7) + 0.5
    v0 -= phi0 * (phi0 @ v0)
    try:
        w, vecs = spla.eigsh(lap, k=2, sigma=-1e-3, which="LM", v0=v0,
                             maxiter=EIG_MAXITER, tol=tol)
    except Exception as exc:
        raise EigenConvergenceFailure(f"shift-invert Lanczos failed: {exc}", math.inf)
    order = np.argsort(w)
    mu1 = float(w[order[1]])
    y = vecs[:, order[1]]
    residual = float(np.linalg.norm(lap @ y - mu1 * y))
    if residual > max(100 * tol, 1e-6):
        raise EigenConvergenceFailure("mu1 eigenpair residual too large", residual)
    return mu1, y


def lambda2(g: Graph, tol: float = EIG_TOL) -> float:
    """Second-largest adjacency eigenvalue."""
    if g.n < 2:
        raise ValueError("lambda2 needs at least two vertices")
    if g.n <= DENSE_SPECTRUM_LIMIT:
        a = adjacency_matrix(g)
        w = np.linalg.eigvalsh(a)
        return float(w[-2])
    if g.is_regular:
        mu1, _ = mu1_and_vector(g, tol)
        return float(g.max_degree * (1.0 - mu1))
    a = adjacency_matrix(g, sparse=True)
    v0 = np.cos(np.arange(g.n) * 0.7) + 0.5
    w = spla.eigsh(a, k=2, which="LA", v0=v0, maxiter=EIG_MAXITER, tol=tol,
                   return_eigenvectors=False)
    return float(np.sort(w)[0])


def spectrum(g: Graph, dense_limit: int = DENSE_SPECTRUM_LIMIT) -> SpectralSummary:
    """Full dense spectrum up to ``dense_limit``; extremal pair beyond it."""
    if g.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    d = g.max_degree if g.is_regular else None
    if g.n <= dense_limit:
        a_eigs = np.linalg.eigvalsh(adjacency_matrix(g))[::-1]
        mu = np.linalg.eigvalsh(normalized_laplacian(g))
        return SpectralSummary(
            n=g.n,
            is_regular=g.is_regular,
            d=d,
            lambda1=float(a_eigs[0]),
            lambda2=float(a_eigs[1]) if g.n >= 2 else None,
            mu1=float(mu[1]) if g.n >= 2 else None,
            adjacency_eigenvalues=tuple(float(x) for x in a_eigs),
            mu_values=tuple(float(x) for x in mu),
            dense=True,
            tol=0.0,
        )
    mu1, _ = mu1_and_vector(g)
    lam2 = lambda2(g)
    a = adjacency_matrix(g, sparse=True)
    v0 = np.cos(np.arange(g.n) * 0.7) + 0.5
    lam1 = float(
        spla.eigsh(a, k=1, which="LA", v0=v0, maxiter=EIG_MAXITER, tol=EIG_TOL,
                   return_eigenvectors=False)[0]
    )
    return SpectralSummary(
        n=g.n, is_regular=g.is_regular, d=d, lambda1=lam1, lambda2=lam2, mu1=mu1,
        adjacency_eigenvalues=None, mu_values=None, dense=False, tol=EIG_TOL,
    )


@dataclass(frozen=True)
class CutReport:
    """A cut with its ratios recomputed from the graph, never from a solver."""

    cut_set: VertexSet
    crossing_edges: int
    volume_small_side: int
    edge_ratio: float
    vertex_ratio: float


def _cut_report(g: Graph, u: VertexSet) -> CutReport:
    stats = boundary(g, u)
    vol_u = g.volume(u)
    vol_rest = 2 * g.num_edges - vol_u
    if vol_rest < vol_u:
        u = u.complement()
        stats = boundary(g, u)
        vol_u = vol_rest
    minvol = vol_u
    edge_ratio = stats.crossing_edges / minvol if minvol else 0.0
    vertex_ratio = len(stats.external_neighborhood) / len(u) if len(u) else 0.0
    return CutReport(
        cut_set=u,
        crossing_edges=stats.crossing_edges,
        volume_small_side=minvol,
        edge_ratio=edge_ratio,
        vertex_ratio=vertex_ratio,
    )


@dataclass(frozen=True)
class CheegerReport:
    """Exact Cheeger constant and edge-isoperimetric number with witnesses."""

    h: Fraction
    h_cut: CutReport
    i: Fraction
    i_cut: CutReport


def cheeger_exact(g: Graph, exact_limit: int = EXACT_CUT_LIMIT) -> CheegerReport:
    """Exhaustive minimization of both bottleneck ratios; n <= exact_limit.

    h minimizes crossing/min(vol, vol-complement) over splits whose sides
    both carry at least one edge endpoint (zero-volume sides define no
    ratio); i minimizes crossing/|U| over non-empty U with |U| <= n/2.
    """
    if g.n > exact_limit:
        raise ExactLimitExceeded(
            f"exact Cheeger needs n <= {exact_limit}, got {g.n}; use sweep_cut"
        )
    if g.num_edges == 0:
        raise ValueError("Cheeger quantities undefined on an edgeless graph")
    adj = kernels.adjacency_mask_array(g)
    deg = kernels.degree_array(g)
    ch, volh, mh, ci, szi, mi = kernels.scan_cheeger(adj, g.n, deg)
    h = Fraction(ch, volh) if volh else Fraction(0)
    i = Fraction(ci, szi)
    return CheegerReport(
        h=h,
        h_cut=_cut_report(g, VertexSet(g.n, mh)),
        i=i,
        i_cut=_cut_report(g, VertexSet(g.n, mi)),
    )


def sweep_cut(g: Graph) -> CutReport:
    """Best prefix cut of the mu1-eigenvector ordering.

    The returned cut satisfies the constructive guarantee
    ``edge_ratio <= sqrt(2 * mu1)``, which is re-verified here; a violation
    raises, because it can only mean an implementation bug.
    """
    report, _ = sweep_cut_with_mu(g)
    return report


def sweep_cut_with_mu(g: Graph) -> tuple[CutReport, float]:
    """Sweep cut plus the mu1 it was derived from (for callers needing both)."""
    if g.n < 2:
        raise ValueError("sweep cut needs at least two vertices")
    if not g.is_connected():
        raise ValueError("sweep cut requires a connected graph; split components first")
    mu1, y = mu1_and_vector(g)
    deg = np.array(g.deg, dtype=float)
    coord = y / np.sqrt(np.maximum(deg, 1))
    order = sorted(range(g.n), key=lambda v: (coord[v], v))
    total_vol = 2 * g.num_edges
    in_prefix = [False] * g.n
    crossing = 0
    vol = 0
    best = None  # (ratio, k)
    for k, v in enumerate(order[:-1]):
        in_prefix[v] = True
        vol += g.deg[v]
        crossing += g.deg[v] - 2 * sum(1 for w in g.adj[v] if in_prefix[w])
        minvol = min(vol, total_vol - vol)
        if minvol == 0:
            continue
        ratio = crossing / minvol
        if best is None or ratio < best[0]:
            best = (ratio, k)
    assert best is not None
    prefix = VertexSet.from_iterable(g.n, order[: best[1] + 1])
    report = _cut_report(g, prefix)
    if report.edge_ratio > math.sqrt(2 * max(mu1, 0.0)) + 1e-6:
        raise RuntimeError(
            f"sweep guarantee violated: ratio {report.edge_ratio:.6g} > "
            f"sqrt(2*mu1) {math.sqrt(2 * max(mu1, 0.0)):.6g}; this is a bug"
        )
    return report, mu1


def expansion_lower_bound_regular(g: Graph) -> float:
    """(d - lambda2) / (2d) for regular graphs, clipped below at zero."""
    if not g.is_regular:
        raise ValueError("spectral expansion bound requires a regular graph")
    d = g.max_degree
    if d == 0:
        return 0.0
    return max(0.0, (d - lambda2(g)) / (2.0 * d))


@dataclass(frozen=True)
class CheegerVerdict:
    h: float
    mu: float
    lower_ok: bool
    upper_ok: bool

    @property
    def holds(self) -> bool:
        return self.lower_ok and self.upper_ok


def verify_cheeger(g: Graph, exact_limit: int = EXACT_CUT_LIMIT,
                   tol: float = 1e-9) -> CheegerVerdict:
    """Check h^2/2 <= mu <= 2h at the stated tolerance (exact h required).

    A False verdict signals an implementation bug, not a graph property.
    """
    report = cheeger_exact(g, exact_limit)
    h = float(report.h)
    if g.n < 2:
        raise ValueError("verify_cheeger needs at least two vertices")
    mu = float(np.linalg.eigvalsh(normalized_laplacian(g))[1])
    return CheegerVerdict(
        h=h,
        mu=mu,
        lower_ok=h * h / 2 <= mu + tol,
        upper_ok=mu <= 2 * h + tol,
    )
