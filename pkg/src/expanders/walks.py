"""Lazy random walks: simulation, stationary law, and confinement bounds.

The walk stays put with probability 1/2 and otherwise moves to a uniform
neighbor; simulation samples exactly that two-stage law so the transition
probabilities match the analytic chain bit-for-bit in distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, VertexSet, as_vertex_set
from .seeding import substream
from .spectral import EXACT_CUT_LIMIT, ExactLimitExceeded, cheeger_exact, mu1_and_vector


def transition_matrix(g: Graph) -> np.ndarray:
    """Dense lazy-walk transition matrix (1/2 stay, 1/(2 deg) per neighbor)."""
    p = np.zeros((g.n, g.n))
    for v in range(g.n):
        p[v, v] = 0.5
        if g.deg[v]:
            step = 0.5 / g.deg[v]
            for w in g.adj[v]:
                p[v, w] = step
        else:
            p[v, v] = 1.0
    return p


def stationary_distribution(g: Graph) -> np.ndarray:
    """pi(v) = deg(v) / (2|E|); requires at least one edge."""
    if g.num_edges == 0:
        raise ValueError("stationary distribution undefined on an edgeless graph")
    return np.array(g.deg, dtype=float) / (2.0 * g.num_edges)


@dataclass(frozen=True)
class WalkTrace:
    steps: tuple[int, ...]
    seed: int
    start_mode: str

    @property
    def length(self) -> int:
        return len(self.steps) - 1


def lazy_walk(g: Graph, ell: int, start="stationary", seed: int = 0) -> WalkTrace:
    """Simulate ``ell`` lazy steps from a stationary or fixed start."""
    if ell < 0:
        raise ValueError("walk length must be non-negative")
    rng = substream(seed, 0)
    if start == "stationary":
        pi = stationary_distribution(g)
        cur = int(rng.choice(g.n, p=pi))
        mode = "stationary"
    else:
        cur = int(start)
        if not 0 <= cur < g.n:
            raise ValueError(f"start vertex {cur} out of range")
        if g.deg[cur] == 0:
            raise ValueError(f"start vertex {cur} is isolated")
        mode = "fixed"
    steps = [cur]
    for _ in range(ell):
        if rng.random() < 0.5:
            steps.append(cur)
            continue
        nbrs = g.adj[cur]
        cur = nbrs[int(rng.random() * len(nbrs))]
        steps.append(cur)
    return WalkTrace(steps=tuple(steps), seed=seed, start_mode=mode)


@dataclass(frozen=True)
class EnsembleStats:
    """Monte Carlo miss/confinement frequencies over stationary-start walks."""

    walks: int
    ell: int
    miss_frequency: float
    confinement_frequency: float

    def binomial_sigma(self, p: float) -> float:
        p = min(max(p, 0.0), 1.0)
        return math.sqrt(p * (1.0 - p) / self.walks)


def walk_ensemble(g: Graph, u, ell: int, walks: int, seed: int = 0) -> EnsembleStats:
    """Vectorized ensemble of lazy walks; batched draws, one stream per call.

    ``miss_frequency`` is the fraction of walks that never visit ``u``;
    ``confinement_frequency`` the fraction that never leave ``u``.
    """
    u = as_vertex_set(g.n, u)
    if walks < 1:
        raise ValueError("need at least one walk")
    if ell < 0:
        raise ValueError("walk length must be non-negative")
    rng = substream(seed, 0)
    pi = stationary_distribution(g)
    deg = np.array(g.deg, dtype=np.int64)
    offsets = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(deg, out=offsets[1:])
    flat = np.fromiter(
        (w for v in range(g.n) for w in g.adj[v]), dtype=np.int64, count=int(offsets[-1])
    )
    in_u = np.zeros(g.n, dtype=bool)
    for v in u:
        in_u[v] = True

    cur = rng.choice(g.n, size=walks, p=pi)
    visited = in_u[cur].copy()
    inside = in_u[cur].copy()
    for _ in range(ell):
        stay = rng.random(walks) < 0.5
        pick = rng.random(walks)
        moved = flat[offsets[cur] + (pick * deg[cur]).astype(np.int64)]
        cur = np.where(stay, cur, moved)
        hit = in_u[cur]
        visited |= hit
        inside &= hit
    return EnsembleStats(
        walks=walks,
        ell=ell,
        miss_frequency=float(np.mean(~visited)),
        confinement_frequency=float(np.mean(inside)),
    )


def spectral_gap(g: Graph) -> float:
    """eta = 1 - lambda2(P); equals mu1/2 for the lazy walk exactly."""
    mu1, _ = mu1_and_vector(g)
    return mu1 / 2.0


def conductance_exact(g: Graph, exact_limit: int = EXACT_CUT_LIMIT) -> float:
    """Phi(G) of the lazy walk; equals h(G)/2 exactly, desk scale only."""
    return float(cheeger_exact(g, exact_limit).h) / 2.0


@dataclass(frozen=True)
class ConfinementReport:
    """Analytic walk bounds plus the conductance chain used to derive them."""

    miss_bound: float
    confinement_bound: float
    pi_u: float
    eta: float
    i_value: float
    i_mode: str
    phi_value: float
    phi_mode: str
    d: int
    ell: int
    chain_ok: bool  # eta >= phi^2 / 2 and phi >= i / (2d)


def confinement_bounds(
    g: Graph, u, ell: int, exact_limit: int = EXACT_CUT_LIMIT
) -> ConfinementReport:
    """Analytic bounds for missing / staying inside ``u`` over ``ell`` steps.

    miss_bound: exp(-(i^3 / 8 d^3) * |u| * ell / n) for a stationary-start
    walk never visiting ``u``. confinement_bound: pi(u) * (1 - eta (1 -
    pi(u)))^ell for never leaving ``u``. At desk scale i(G) and Phi are
    exact; beyond it the spectral lower bound i >= mu1 * min_deg / 2 is used
    (a lower bound on i only enlarges miss_bound, keeping it valid).
    """
    u = as_vertex_set(g.n, u)
    if len(u) == 0 or len(u) == g.n:
        raise ValueError("u must be a proper non-empty subset")
    if ell < 0:
        raise ValueError("walk length must be non-negative")
    if g.num_edges == 0:
        raise ValueError("walk bounds undefined on an edgeless graph")
    d = g.max_degree
    n = g.n
    mu1, _ = mu1_and_vector(g)
    eta = mu1 / 2.0
    if g.n <= exact_limit:
        rep = cheeger_exact(g, exact_limit)
        i_value = float(rep.i)
        i_mode = "exact"
        phi_value = float(rep.h) / 2.0
        phi_mode = "exact"
    else:
        i_value = mu1 * g.min_degree / 2.0
        i_mode = "spectral-lower-bound"
        phi_value = i_value / (2.0 * d)
        phi_mode = "chain-lower-bound"
    pi = stationary_distribution(g)
    pi_u = float(sum(pi[v] for v in u))
    miss_bound = math.exp(-(i_value**3) / (8.0 * d**3) * len(u) * ell / n)
    confinement_bound = pi_u * (1.0 - eta * (1.0 - pi_u)) ** ell
    chain_ok = (eta + 1e-12 >= phi_value**2 / 2.0) and (
        phi_value + 1e-12 >= i_value / (2.0 * d)
    )
    return ConfinementReport(
        miss_bound=min(miss_bound, 1.0),
        confinement_bound=confinement_bound,
        pi_u=pi_u,
        eta=eta,
        i_value=i_value,
        i_mode=i_mode,
        phi_value=phi_value,
        phi_mode=phi_mode,
        d=d,
        ell=ell,
        chain_ok=chain_ok,
    )
