"""Vertex-expansion certification and separator search.

Exact mode enumerates all admissible subsets (kernel scan) and returns the
exact worst ratio with a reproducible witness; heuristic mode reports a
certified interval and never claims exactness. Every CLI surface prints the
exhaustive flag.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .graph import Graph, VertexSet, as_vertex_set, ball, boundary
from .io import graph_hash
from .spectral import (
    EXACT_CUT_LIMIT,
    ExactLimitExceeded,
    expansion_lower_bound_regular,
    mu1_and_vector,
    sweep_cut,
)

EXACT_CERTIFY_LIMIT = 22
EXACT_SEPARATOR_LIMIT = 20

# Size caps fixed here once: admissible sets have size <= floor(n/2); both
# separator sides have size <= floor(2n/3). The floor on the separator cap is
# what keeps the separator/expansion inequality exact on small graphs.
def half_cap(n: int) -> int:
    return n // 2


def separator_side_cap(n: int) -> int:
    return (2 * n) // 3


@dataclass(frozen=True)
class ExpansionMode:
    """Which subset sizes count: up to n/2, an explicit size set, or up to k."""

    kind: str  # 'half' | 'index_set' | 'up_to_k'
    sizes: tuple[int, ...] | None = None
    k: int | None = None

    @classmethod
    def half(cls) -> "ExpansionMode":
        return cls("half")

    @classmethod
    def index_set(cls, sizes: Iterable[int]) -> "ExpansionMode":
        return cls("index_set", sizes=tuple(sorted(set(int(s) for s in sizes))))

    @classmethod
    def up_to_k(cls, k: int) -> "ExpansionMode":
        return cls("up_to_k", k=int(k))

    def allowed_array(self, n: int) -> np.ndarray:
        allowed = np.zeros(n + 1, dtype=bool)
        if self.kind == "half":
            allowed[1 : half_cap(n) + 1] = True
        elif self.kind == "index_set":
            for s in self.sizes or ():
                if 1 <= s <= n:
                    allowed[s] = True
        elif self.kind == "up_to_k":
            allowed[1 : min(self.k, n) + 1] = True
        else:
            raise ValueError(f"unknown mode kind {self.kind!r}")
        allowed[0] = False
        return allowed

    def describe(self) -> str:
        if self.kind == "half":
            return "half"
        if self.kind == "index_set":
            return f"index_set{list(self.sizes or ())}"
        return f"up_to_k({self.k})"


@dataclass(frozen=True)
class ExpansionReport:
    """Certified expansion value (exact) or interval (heuristic) with witness.

    ``alpha_star`` is the exact worst ratio min |N(U)|/|U| over the mode's
    admissible sets, or None when the report is heuristic. The empty
    admissible family certifies vacuously: alpha_star is +infinity.
    """

    mode: str
    n: int
    exhaustive: bool
    alpha_star: Fraction | float | None
    witness: Optional[VertexSet]
    alpha_lo: float
    alpha_hi: float
    graph_hash: str

    def is_alpha_expander(self, alpha) -> Optional[bool]:
        """Verdict for a query alpha; None when the interval is inconclusive."""
        a = float(alpha)
        if self.exhaustive:
            star = self.alpha_star
            return True if star == math.inf else float(star) >= a
        if self.alpha_lo >= a:
            return True
        if self.alpha_hi < a:
            return False
        return None


def certify_alpha_exact(
    g: Graph, mode: ExpansionMode | None = None, exact_limit: int = EXACT_CERTIFY_LIMIT
) -> ExpansionReport:
    """Exhaustive worst-expansion certificate over the mode's admissible sets."""
    if g.n > exact_limit:
        raise ExactLimitExceeded(
            f"exact certification needs n <= {exact_limit}, got {g.n}; "
            "use certify_heuristic"
        )
    if g.n == 0:
        raise ValueError("cannot certify the empty graph")
    mode = mode or ExpansionMode.half()
    allowed = mode.allowed_array(g.n)
    adj = kernels.adjacency_mask_array(g)
    hit = kernels.scan_vertex_expansion(adj, g.n, allowed)
    if hit is None:  # empty admissible family: vacuous expander
        return ExpansionReport(
            mode=mode.describe(),
            n=g.n,
            exhaustive=True,
            alpha_star=math.inf,
            witness=None,
            alpha_lo=math.inf,
            alpha_hi=math.inf,
            graph_hash=graph_hash(g),
        )
    bn, size, mask = hit
    witness = VertexSet(g.n, mask)
    stats = boundary(g, witness)  # recompute: witness must reproduce the ratio
    if len(stats.external_neighborhood) != bn:
        raise AssertionError("kernel/witness mismatch; this is a bug")
    star = Fraction(bn, size)
    return ExpansionReport(
        mode=mode.describe(),
        n=g.n,
        exhaustive=True,
        alpha_star=star,
        witness=witness,
        alpha_lo=float(star),
        alpha_hi=float(star),
        graph_hash=graph_hash(g),
    )


def _candidate_sets(g: Graph) -> Iterable[VertexSet]:
    """Witness candidates: components, sweep prefixes, BFS balls, local swaps."""
    n = g.n
    cap = half_cap(n)
    comps = g.components()
    if len(comps) > 1:
        smallest = min(comps, key=len)
        if 1 <= len(smallest) <= cap:
            yield smallest
    # sweep-cut prefixes per component
    for comp in comps:
        if len(comp) < 3:
            continue
        sub, ids = _induce(g, comp)
        try:
            mu1, y = mu1_and_vector(sub)
        except Exception:
            continue
        deg = np.array(sub.deg, dtype=float)
        coord = y / np.sqrt(np.maximum(deg, 1))
        order = sorted(range(sub.n), key=lambda v: (coord[v], v))
        for prefix_order in (order, order[::-1]):
            members: list[int] = []
            for v in prefix_order[:-1]:
                members.append(ids[v])
                if len(members) > cap:
                    break
                yield VertexSet.from_iterable(n, members)
    # BFS balls from a sample of start vertices
    starts = range(n) if n <= 256 else range(0, n, max(1, n // 128))
    for v in starts:
        t = 0
        while True:
            b = ball(g, v, t)
            if len(b) > cap:
                break
            yield b
            if len(ball(g, v, t + 1)) == len(b):
                break
            t += 1


def _induce(g: Graph, u: VertexSet):
    from .graph import induce

    return induce(g, u)


def _ratio(g: Graph, u: VertexSet) -> Fraction:
    return Fraction(len(boundary(g, u).external_neighborhood), len(u))


def _local_search(g: Graph, u: VertexSet, rounds: int = 64) -> VertexSet:
    """Single-vertex swaps that lower the boundary ratio, bounded rounds."""
    cap = half_cap(g.n)
    best = u
    best_ratio = _ratio(g, best)
    for _ in range(rounds):
        improved = False
        stats = boundary(g, best)
        # try adding a boundary vertex, then removing a member
        for v in sorted(stats.external_neighborhood):
            if len(best) + 1 > cap:
                break
            cand = best | VertexSet.from_iterable(g.n, [v])
            r = _ratio(g, cand)
            if r < best_ratio:
                best, best_ratio, improved = cand, r, True
                break
        if not improved and len(best) > 1:
            for v in sorted(best):
                cand = best - VertexSet.from_iterable(g.n, [v])
                r = _ratio(g, cand)
                if r < best_ratio:
                    best, best_ratio, improved = cand, r, True
                    break
        if not improved:
            break
    return best


def certify_heuristic(g: Graph, alpha=None) -> ExpansionReport:
    """Interval certificate: spectral lower bound, candidate-witness upper bound.

    The interval may be vacuous ([0, inf) pieces) and is reported as such;
    exhaustive is always False here.
    """
    if g.n == 0:
        raise ValueError("cannot certify the empty graph")
    n = g.n
    best_witness: Optional[VertexSet] = None
    hi = math.inf
    for cand in _candidate_sets(g):
        r = float(_ratio(g, cand))
        if (
            best_witness is None
            or r < hi
            or (r == hi and len(cand) < len(best_witness))
        ):
            best_witness, hi = cand, r
        if hi == 0.0:
            break
    if best_witness is not None and hi > 0:
        refined = _local_search(g, best_witness)
        r = float(_ratio(g, refined))
        if r < hi:
            best_witness, hi = refined, r

    lo = 0.0
    if g.is_connected() and n >= 2:
        if g.is_regular:
            lo = expansion_lower_bound_regular(g)
        else:
            try:
                mu1, _ = mu1_and_vector(g)
                # h >= mu/2 and |N(U)| >= e(U, comp U)/Delta >= h*min_deg*|U|/Delta
                lo = max(0.0, mu1 / 2.0 * g.min_degree / g.max_degree)
            except Exception:
                lo = 0.0
    return ExpansionReport(
        mode="half",
        n=n,
        exhaustive=False,
        alpha_star=None,
        witness=best_witness,
        alpha_lo=lo,
        alpha_hi=hi,
        graph_hash=graph_hash(g),
    )


@dataclass(frozen=True)
class Separator:
    """Partition V = A + S + B with both sides within the 2n/3 cap and no A-B edges.

    Either side may be empty; structural validity is checked on construction.
    """

    a: VertexSet
    s: VertexSet
    b: VertexSet

    def __post_init__(self):
        n = self.a.n
        if self.s.n != n or self.b.n != n:
            raise ValueError("separator parts over different ground sets")
        if (self.a.mask | self.s.mask | self.b.mask) != (1 << n) - 1 or (
            self.a.mask & self.s.mask
            or self.a.mask & self.b.mask
            or self.s.mask & self.b.mask
        ):
            raise ValueError("separator parts must partition the vertex set")
        cap = separator_side_cap(n)
        if len(self.a) > cap or len(self.b) > cap:
            raise ValueError(f"separator sides must have at most {cap} vertices")

    @staticmethod
    def validated(g: Graph, a: VertexSet, s: VertexSet, b: VertexSet) -> "Separator":
        sep = Separator(a, s, b)
        for v in a:
            for w in g.adj[v]:
                if w in b:
                    raise ValueError(f"edge ({v}, {w}) crosses between A and B")
        return sep

    @property
    def size(self) -> int:
        return len(self.s)


def _components_within(g: Graph, excluded_mask: int) -> list[tuple[int, int]]:
    """(mask, size) of connected components of g minus the excluded vertices."""
    seen = excluded_mask
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        mask = 0
        stack = [v]
        seen |= 1 << v
        while stack:
            x = stack.pop()
            mask |= 1 << x
            for y in g.adj[x]:
                if not (seen >> y) & 1:
                    seen |= 1 << y
                    stack.append(y)
        comps.append((mask, mask.bit_count()))
    return comps


def _split_components(n: int, comps: list[tuple[int, int]]) -> Optional[tuple[int, int]]:
    """Group components into sides (a_mask, b_mask), both within the size cap."""
    cap = separator_side_cap(n)
    total = sum(size for _, size in comps)
    if total > 2 * cap:
        return None
    lower = max(0, total - cap)  # side A must absorb at least this much
    # subset-sum over component sizes, tracking one achieving subset
    achievable = {0: 0}  # sum -> mask of chosen components
    for mask, size in comps:
        new = {}
        for s, chosen in achievable.items():
            t = s + size
            if t <= cap and t not in achievable and t not in new:
                new[t] = chosen | mask
        achievable.update(new)
    for s, chosen in sorted(achievable.items()):
        if lower <= s <= cap:
            rest = 0
            for mask, _ in comps:
                if not mask & chosen:
                    rest |= mask
            return chosen, rest
    return None


def find_separator(
    g: Graph, mode: str = "exact", exact_limit: int = EXACT_SEPARATOR_LIMIT
) -> Optional[Separator]:
    """Minimum separator by enumeration (n <= exact_limit) or best-found.

    Exact mode enumerates candidate sets S by increasing size and returns the
    first (lexicographically least) valid separator, which therefore has
    minimum size. Heuristic mode completes sweep cuts and ball boundaries
    into separators and returns the best one found.
    """
    n = g.n
    if n == 0:
        return None
    if mode == "exact":
        if n > exact_limit:
            raise ExactLimitExceeded(
                f"exact separator search needs n <= {exact_limit}, got {g.n}"
            )
        for size in range(0, n + 1):
            for combo in itertools.combinations(range(n), size):
                s_mask = 0
                for v in combo:
                    s_mask |= 1 << v
                comps = _components_within(g, s_mask)
                split = _split_components(n, comps)
                if split is not None:
                    a_mask, b_mask = split
                    return Separator.validated(
                        g,
                        VertexSet(n, a_mask),
                        VertexSet(n, s_mask),
                        VertexSet(n, b_mask),
                    )
        return None
    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")
    best: Optional[Separator] = None
    for cand in _candidate_sets(g):
        stats = boundary(g, cand)
        s_set = stats.external_neighborhood
        a_set = cand
        b_set = (cand | s_set).complement()
        cap = separator_side_cap(n)
        if len(a_set) > cap or len(b_set) > cap:
            continue
        try:
            sep = Separator.validated(g, a_set, s_set, b_set)
        except ValueError:
            continue
        if best is None or sep.size < best.size:
            best = sep
    return best


def check_separator_bound(g: Graph, sep: Separator, report: ExpansionReport) -> bool:
    """True iff |S| >= alpha* n / (3 (1 + alpha*)); a False is a bug trap."""
    if not report.exhaustive:
        raise ValueError("separator bound check requires an exhaustive report")
    star = report.alpha_star
    if star == math.inf:
        bound = Fraction(g.n, 3)
    else:
        star = Fraction(star)
        bound = star * g.n / (3 * (1 + star))
    return Fraction(sep.size) >= bound
