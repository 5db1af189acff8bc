"""Seeded graph generators and local-sparsity checking.

Generators are pure functions of their :class:`GenSpec`: identical specs give
bit-identical graphs on every platform (Philox streams, see
:mod:`expanders.seeding`).
"""

from __future__ import annotations

import heapq
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import kernels
from .graph import Graph, VertexSet
from .seeding import derive_seed, substream

KINDS = ("gnp", "random_regular", "complete_bipartite", "clique_union", "path", "cycle")

# Full-resample cap for the configuration model: for constant degree the
# per-attempt success probability is bounded below, so hitting the cap is a
# loud signal rather than a long stall.
REGULAR_RESAMPLE_CAP = 1000

DEFAULT_SPARSITY_BUDGET = 2_000_000


class GenerationFailed(RuntimeError):
    """Generator exceeded its resampling cap; carries the attempt count."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


@dataclass(frozen=True)
class GenSpec:
    """A generator kind, its parameters, and a 64-bit seed."""

    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}; choose from {KINDS}")

    def to_json(self) -> str:
        return json.dumps(
            {"kind": self.kind, "params": self.params, "seed": self.seed},
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "GenSpec":
        d = json.loads(text)
        return cls(kind=d["kind"], params=d["params"], seed=d["seed"])


def _pairs_from_indices(idx: np.ndarray, n: int) -> list[tuple[int, int]]:
    """Invert the linear index of pairs (u, v), u < v, in row-major order."""
    idx = idx.astype(np.float64)
    u = np.floor((2 * n - 1 - np.sqrt((2 * n - 1) ** 2 - 8 * idx)) / 2).astype(np.int64)
    u = np.clip(u, 0, n - 2)

    def offset(uu):
        return uu * (2 * n - uu - 1) // 2

    ii = idx.astype(np.int64)
    for _ in range(4):  # float inversion is off by at most one either way
        too_high = offset(u) > ii
        u[too_high] -= 1
        too_low = offset(u + 1) <= ii
        u[too_low] += 1
        if not (too_high.any() or too_low.any()):
            break
    v = ii - offset(u) + u + 1
    return list(zip(u.tolist(), v.tolist()))


def _gen_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0 <= p <= 1:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError("n must be non-negative")
    total = n * (n - 1) // 2
    if p == 0 or total == 0:
        return Graph(n, [])
    if p == 1:
        return Graph(n, itertools.combinations(range(n), 2))
    rng = substream(seed, 0)
    # Geometric skipping: gaps between successive present pairs are iid
    # Geometric(p), which realizes independent pair inclusion exactly.
    positions: list[np.ndarray] = []
    cur = -1
    while True:
        batch = max(1024, int(1.2 * (total - cur) * p) + 16)
        gaps = rng.geometric(p, size=batch)
        pos = cur + np.cumsum(gaps)
        keep = pos[pos < total]
        positions.append(keep)
        if len(keep) < len(pos):  # crossed the end of the pair range
            break
        cur = int(pos[-1])
    idx = np.concatenate(positions)
    if len(idx) == 0:
        return Graph(n, [])
    return Graph(n, _pairs_from_indices(idx, n))


def _gen_random_regular(n: int, d: int, seed: int) -> Graph:
    if d < 0 or n < 0:
        raise ValueError("n and d must be non-negative")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if d >= n and not (d == 0 and n <= 1):
        raise ValueError(f"degree d={d} must be less than n={n}")
    if d == 0:
        return Graph(n, [])
    for attempt in range(REGULAR_RESAMPLE_CAP):
        rng = substream(seed, attempt)
        stubs = rng.permutation(n * d)
        a = stubs[0::2] // d
        b = stubs[1::2] // d
        if (a == b).any():
            continue
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        keys = lo.astype(np.int64) * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        return Graph(n, zip(lo.tolist(), hi.tolist()))
    raise GenerationFailed(
        f"configuration model failed to produce a simple {d}-regular graph "
        f"on {n} vertices after {REGULAR_RESAMPLE_CAP} attempts",
        attempts=REGULAR_RESAMPLE_CAP,
    )


def gen(spec: GenSpec) -> Graph:
    """Realize a GenSpec. Deterministic: equal specs give equal graphs."""
    p = spec.params
    if spec.kind == "gnp":
        return _gen_gnp(int(p["n"]), float(p["p"]), spec.seed)
    if spec.kind == "random_regular":
        return _gen_random_regular(int(p["n"]), int(p["d"]), spec.seed)
    if spec.kind == "complete_bipartite":
        a, b = int(p["a"]), int(p["b"])
        return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if spec.kind == "clique_union":
        size, count = int(p["size"]), int(p["count"])
        edges = []
        for c in range(count):
            base = c * size
            edges.extend(
                (base + i, base + j) for i, j in itertools.combinations(range(size), 2)
            )
        return Graph(size * count, edges)
    if spec.kind == "path":
        n = int(p["n"])
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    if spec.kind == "cycle":
        n = int(p["n"])
        if n < 3:
            raise ValueError("cycles need at least 3 vertices")
        return Graph(n, ((i, (i + 1) % n) for i in range(n)))
    raise ValueError(f"unknown generator kind {spec.kind!r}")


def default_sparsity_beta(c1: float, c2: float) -> float:
    """The locally-sparse set-size fraction associated with densities c1 > c2 > 1."""
    if not c1 > c2 > 1:
        raise ValueError("need c1 > c2 > 1")
    return (c2 / (5.0 * c1)) ** (c2 / (c2 - 1.0))


@dataclass(frozen=True)
class SparsityReport:
    """Worst internal-density witness among sets of at most beta*n vertices."""

    c1_observed: float
    worst_ratio: Fraction
    worst_witness: VertexSet
    beta_used: float
    exhaustive: bool
    sets_examined: int
    mode: str

    def is_locally_sparse(self, c2) -> bool:
        """True iff every examined set W spans fewer than c2*|W| edges."""
        return self.worst_ratio < Fraction(c2)


def _internal_edges(g: Graph, members: set[int]) -> int:
    twice = sum(1 for v in members for w in g.adj[v] if w in members)
    return twice // 2


def _subset_count(n: int, cap: int) -> int:
    return sum(math.comb(n, i) for i in range(1, cap + 1))


def check_locally_sparse(
    g: Graph, c2, beta: float, budget: int = DEFAULT_SPARSITY_BUDGET
) -> SparsityReport:
    """Scan sets of at most beta*n vertices for the densest one.

    Exhaustive when feasible (kernel scan for n <= 24, otherwise direct
    enumeration within ``budget`` subsets); otherwise a documented heuristic
    scan (BFS-grown connected sets from every vertex plus min-degree peeling
    suffixes), flagged with ``exhaustive=False``, never silently.
    """
    c2 = Fraction(c2)
    if not c2 > 1:
        raise ValueError("c2 must exceed 1")
    if not 0 < beta < 1:
        raise ValueError("beta must lie in (0, 1)")
    n = g.n
    c1_observed = g.num_edges / n if n else 0.0
    cap = math.floor(beta * n)
    empty = VertexSet.empty(n)
    if cap < 1 or n == 0:
        return SparsityReport(c1_observed, Fraction(0), empty, beta, True, 0, "vacuous")

    if n <= kernels.MAX_SCAN_BITS:
        adj = kernels.adjacency_mask_array(g)
        hit = kernels.scan_max_density(adj, n, 1, cap)
        edges, size, mask = hit
        return SparsityReport(
            c1_observed,
            Fraction(edges, size),
            VertexSet(n, mask),
            beta,
            True,
            (1 << n) - 1,
            "kernel",
        )

    if _subset_count(n, cap) <= budget:
        best = (Fraction(0), empty)
        examined = 0
        for size in range(1, cap + 1):
            for combo in itertools.combinations(range(n), size):
                examined += 1
                ratio = Fraction(_internal_edges(g, set(combo)), size)
                if ratio > best[0]:
                    best = (ratio, VertexSet.from_iterable(n, combo))
        return SparsityReport(
            c1_observed, best[0], best[1], beta, True, examined, "enumeration"
        )

    # Heuristic scan: worst-case dense small sets in sparse random graphs are
    # connected with high probability, so BFS-grown connected sets plus
    # peeling suffixes cover the realistic witnesses.
    best_ratio = Fraction(0)
    best_set = empty
    examined = 0

    def consider(members: tuple[int, ...], internal: int):
        nonlocal best_ratio, best_set, examined
        examined += 1
        ratio = Fraction(internal, len(members))
        if ratio > best_ratio:
            best_ratio = ratio
            best_set = VertexSet.from_iterable(n, members)

    for start in range(n):
        members: set[int] = {start}
        order = [start]
        internal = 0
        frontier = list(g.adj[start])
        seen = {start, *frontier}
        while len(members) < cap and frontier:
            # grow by the frontier vertex with most edges into the set
            gains = [(sum(1 for w in g.adj[v] if w in members), -v) for v in frontier]
            gain, negv = max(gains)
            v = -negv
            frontier.remove(v)
            members.add(v)
            order.append(v)
            internal += gain
            consider(tuple(order), internal)
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)

    # min-degree peeling; suffix sets of the peel order with size <= cap
    deg = list(g.deg)
    alive = [True] * n
    removal: list[int] = []
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    edges_left = g.num_edges
    edges_at_size: dict[int, tuple[int, tuple[int, ...]]] = {}
    alive_count = n
    while heap:
        d_v, v = heapq.heappop(heap)
        if not alive[v] or d_v != deg[v]:
            continue
        alive[v] = False
        removal.append(v)
        alive_count -= 1
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                edges_left -= 1
                heapq.heappush(heap, (deg[w], w))
        if 1 <= alive_count <= cap and alive_count not in edges_at_size:
            rest = tuple(x for x in range(n) if alive[x])
            edges_at_size[alive_count] = (edges_left, rest)
    for size, (edges_cnt, members) in edges_at_size.items():
        consider(members, edges_cnt)

    return SparsityReport(
        c1_observed, best_ratio, best_set, beta, False, examined, "heuristic"
    )


@dataclass(frozen=True)
class FrequencyReport:
    """Monte Carlo frequency of locally-dense violations across sampled graphs."""

    frequency: float
    trials: int
    violations: int
    variant: str
    beta_used: float | None
    exhaustive_all: bool
    params: dict[str, Any]


def sparse_violation_frequency(
    spec: GenSpec,
    c2=None,
    beta: float | None = None,
    trials: int = 20,
    variant: str = "spans",
    delta: float | None = None,
    budget: int = DEFAULT_SPARSITY_BUDGET,
) -> FrequencyReport:
    """Fraction of sampled graphs containing a violating vertex set.

    ``spans`` looks for a set of at most beta*n vertices spanning at least
    c2*|W| edges (beta defaults to the density-formula value with c1 = p*n).
    ``touches`` looks for a set of round(delta/ln(1/delta)*n) vertices
    touching at least delta*n edges; its witness search (top degrees) is a
    lower bound, so the reported frequency makes no pass/fail claim.
    """
    if spec.kind != "gnp":
        raise ValueError("violation frequency is defined for gnp specs")
    if trials < 1:
        raise ValueError("need at least one trial")
    n = int(spec.params["n"])
    p = float(spec.params["p"])
    exhaustive_all = True
    violations = 0

    if variant == "spans":
        if c2 is None:
            raise ValueError("spans variant needs c2")
        if beta is None:
            c1 = p * n
            if not c1 > float(c2) > 1:
                raise ValueError(
                    "default beta needs p*n > c2 > 1; pass beta explicitly"
                )
            beta = default_sparsity_beta(c1, float(c2))
        for t in range(trials):
            child = GenSpec(spec.kind, spec.params, derive_seed(spec.seed, t))
            g = gen(child)
            report = check_locally_sparse(g, c2, beta, budget)
            exhaustive_all = exhaustive_all and report.exhaustive
            if not report.is_locally_sparse(c2):
                violations += 1
        params: dict[str, Any] = {"c2": str(c2), "n": n, "p": p}
    elif variant == "touches":
        if delta is None:
            raise ValueError("touches variant needs delta")
        if not 0 < delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        size = max(1, round(delta / math.log(1 / delta) * n))
        threshold = delta * n
        exhaustive_all = False  # witness search is top-degrees only
        for t in range(trials):
            child = GenSpec(spec.kind, spec.params, derive_seed(spec.seed, t))
            g = gen(child)
            order = sorted(range(g.n), key=lambda v: (-g.deg[v], v))[:size]
            members = set(order)
            touched = sum(g.deg[v] for v in members) - _internal_edges(g, members)
            if touched >= threshold:
                violations += 1
        params = {"delta": delta, "set_size": size, "n": n, "p": p}
        beta = None
    else:
        raise ValueError(f"unknown variant {variant!r}")

    return FrequencyReport(
        frequency=violations / trials,
        trials=trials,
        violations=violations,
        variant=variant,
        beta_used=beta,
        exhaustive_all=exhaustive_all,
        params=params,
    )
