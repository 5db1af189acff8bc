"""Minor embeddings: validation, degree-3 reduction, the embed-or-separate
procedure, and clique minors via lazy-random-walk hitting sets.

Every embedding leaving this module passes full structural validation
(disjoint branch sets, each connected, every target edge covered); failure
branches return structured evidence instead of silent partial results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .certify import Separator, separator_side_cap
from .graph import Graph, VertexSet, as_vertex_set, boundary, distances, induce
from .seeding import derive_seed
from .spectral import EXACT_CUT_LIMIT, cheeger_exact, sweep_cut_with_mu
from .walks import lazy_walk

CCL_LIMIT = 10


@dataclass(frozen=True)
class MinorEmbedding:
    """Branch sets (one per target vertex) realizing ``h`` as a minor."""

    h: Graph
    branch_sets: tuple[VertexSet, ...]


@dataclass(frozen=True)
class MinorValidation:
    ok: bool
    violation: str | None


def validate_minor(g: Graph, emb: MinorEmbedding) -> MinorValidation:
    """Check disjointness, connectivity, and target-edge coverage."""
    if len(emb.branch_sets) != emb.h.n:
        return MinorValidation(False, "one branch set required per target vertex")
    seen = VertexSet.empty(g.n)
    for i, bs in enumerate(emb.branch_sets):
        if bs.n != g.n:
            return MinorValidation(False, f"branch set {i} is over the wrong ground set")
        if not bs:
            return MinorValidation(False, f"branch set {i} is empty")
        if not seen.isdisjoint(bs):
            other = next(
                j for j in range(i) if not emb.branch_sets[j].isdisjoint(bs)
            )
            return MinorValidation(False, f"branch sets {other} and {i} overlap")
        seen = seen | bs
        sub, _ = induce(g, bs)
        if not sub.is_connected():
            return MinorValidation(False, f"branch set {i} is not connected")
    for i, j in emb.h.edges:
        stats = boundary(g, emb.branch_sets[i], emb.branch_sets[j])
        if stats.crossing_edges == 0:
            return MinorValidation(
                False, f"no edge between branch sets {i} and {j} for target edge"
            )
    return MinorValidation(True, None)


def reduce_degree3(h: Graph) -> tuple[Graph, tuple[VertexSet, ...]]:
    """Split high-degree target vertices into paths; max degree becomes <= 3.

    Returns the reduced graph and, per original vertex, the set of its host
    vertices (a path). The original graph is a minor of the reduced one via
    exactly this map, which is re-validated here.
    """
    hosts: list[list[int]] = []
    next_id = 0
    for v in range(h.n):
        d = h.deg[v]
        count = 1 if d <= 3 else d - 2
        hosts.append(list(range(next_id, next_id + count)))
        next_id += count
    edges: list[tuple[int, int]] = []
    for path in hosts:
        edges.extend(zip(path, path[1:]))
    # slot assignment: endpoint hosts carry two targets, inner hosts one
    slot_of: dict[tuple[int, int], int] = {}
    for v in range(h.n):
        path = hosts[v]
        nbrs = list(h.adj[v])
        if len(path) == 1:
            for w in nbrs:
                slot_of[(v, w)] = path[0]
        else:
            assignment = [path[0], path[0]] + path[1:-1] + [path[-1], path[-1]]
            for w, host in zip(nbrs, assignment):
                slot_of[(v, w)] = host
    for v, w in h.edges:
        edges.append((slot_of[(v, w)], slot_of[(w, v)]))
    reduced = Graph(next_id, edges)
    if reduced.max_degree > 3:
        raise AssertionError("degree reduction left a vertex of degree > 3; bug")
    expansion = tuple(VertexSet.from_iterable(next_id, path) for path in hosts)
    check = validate_minor(reduced, MinorEmbedding(h, expansion))
    if not check.ok:
        raise AssertionError(f"degree reduction does not contract back: {check.violation}")
    return reduced, expansion


@dataclass(frozen=True)
class DiameterOrCut:
    """Either a certified logarithmic diameter or a low-expansion ball."""

    kind: str  # 'diameter' | 'cut'
    diameter: int | None
    bound: float
    c0: int
    cut: Optional[VertexSet]
    cut_boundary: int | None


def diameter_or_cut(g: Graph, alpha: float) -> DiameterOrCut:
    """Certified diameter <= C0 log2 n, or a ball U with |N(U)| <= alpha |U|.

    C0 = ceil(2 / log2(1 + alpha)) + 2. The cut, when returned, satisfies
    the proportional bound |N(U)| <= alpha*|U| with |U| <= n/2 (which
    implies the additive alpha*n form). Disconnected inputs immediately
    yield the smallest component as a boundary-free cut.
    """
    if g.n == 0:
        raise ValueError("empty graph")
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    c0 = math.ceil(2.0 / math.log2(1.0 + alpha)) + 2
    bound = c0 * math.log2(max(g.n, 2))
    comps = g.components()
    if len(comps) > 1:
        smallest = min(comps, key=len)
        return DiameterOrCut("cut", None, bound, c0, smallest, 0)

    def ball_cut_from(v: int) -> Optional[tuple[VertexSet, int]]:
        dist = distances(g, v)
        members = [x for x in range(g.n) if dist[x] == 0]
        radius = 0
        while True:
            nxt = [x for x in range(g.n) if dist[x] == radius + 1]
            if len(members) > g.n // 2:
                return None
            if len(nxt) <= alpha * len(members):
                return VertexSet.from_iterable(g.n, members), len(nxt)
            members.extend(nxt)
            radius += 1

    worst = 0
    for v in range(g.n):
        dist = distances(g, v)
        ecc = int(max(dist))
        if ecc > bound:
            far = max(range(g.n), key=lambda x: (dist[x], -x))
            for probe in (v, far):
                hit = ball_cut_from(probe)
                if hit is not None:
                    cut, nb = hit
                    return DiameterOrCut("cut", None, bound, c0, cut, nb)
            raise AssertionError(
                "both endpoint balls grew past n/2 despite a long eccentricity; bug"
            )
        worst = max(worst, ecc)
    return DiameterOrCut("diameter", worst, bound, c0, None, None)


@dataclass(frozen=True)
class EmbedResult:
    kind: str  # 'embedding' | 'separator'
    embedding: Optional[MinorEmbedding]
    separator: Optional[Separator]
    c0: int
    supernode_cap: int
    checkpoints: int


def embed_or_separate(
    g: Graph, h: Graph, alpha: float, allow_oversized: bool = False
) -> EmbedResult:
    """Embed ``h`` as a minor or exhibit a separator of size <= alpha n.

    The target is first reduced to maximum degree 3. The reservoir loop
    maintains V = A + B + C with |N(A, C)| <= alpha |A| re-validated at
    every checkpoint, embedding one supernode per round along short paths of
    the logarithmic-diameter reservoir, or moving low-expansion balls to A.
    When A first exceeds n/3, N(A) is the promised separator.

    The size precondition keeps |B| below alpha n / 3; desk-scale runs may
    pass ``allow_oversized=True`` (every output is still fully validated
    structurally, so oversized runs remain sound claims about their output).
    """
    if h.n == 0:
        raise ValueError("the target graph is empty")
    if not 0 < alpha:
        raise ValueError("alpha must be positive")
    reduced, expansion = reduce_degree3(h)
    c0 = math.ceil(2.0 / math.log2(1.0 + alpha)) + 2
    cap = math.floor(2 * c0 * math.log2(max(g.n, 2))) + 1
    k = reduced.n
    if k * cap * 3 > alpha * g.n and not allow_oversized:
        raise ValueError(
            f"size precondition failed: k={k} supernodes of up to {cap} vertices "
            f"exceed alpha*n/3 = {alpha * g.n / 3:.1f}; "
            "pass allow_oversized=True for desk-scale experiments"
        )

    n = g.n
    a_set = VertexSet.empty(n)
    c_set = VertexSet.full(n)
    branch: dict[int, VertexSet] = {}
    checkpoints = 0

    def check_invariant() -> None:
        nonlocal checkpoints
        checkpoints += 1
        if not a_set:
            return
        stats = boundary(g, a_set, c_set)
        if len(stats.external_neighborhood) > alpha * len(a_set) + 1e-9:
            raise AssertionError("reservoir-boundary invariant broken; bug")

    while True:
        if 3 * len(a_set) > n:
            s_set = boundary(g, a_set).external_neighborhood
            b_side = (a_set | s_set).complement()
            sep = Separator.validated(g, a_set, s_set, b_side)
            if len(s_set) > alpha * n + 1e-9:
                raise AssertionError(
                    f"separator has {len(s_set)} > alpha*n vertices; "
                    "the size precondition was violated too far"
                )
            return EmbedResult("separator", None, sep, c0, cap, checkpoints)
        missing = [i for i in range(k) if i not in branch]
        if not missing:
            break
        i = missing[0]
        embedded_nbrs = [j for j in reduced.adj[i] if j in branch]
        pivots: dict[int, int] = {}
        dumped = False
        for j in embedded_nbrs:
            stats = boundary(g, branch[j], c_set)
            if not stats.external_neighborhood:
                a_set = a_set | branch[j]
                del branch[j]
                check_invariant()
                dumped = True
                break
            pivots[j] = min(stats.external_neighborhood)
        if dumped:
            continue
        sub, ids = induce(g, c_set)
        verdict = diameter_or_cut(sub, alpha)
        if verdict.kind == "cut":
            moved = VertexSet.from_iterable(n, (ids[v] for v in verdict.cut))
            a_set = a_set | moved
            c_set = c_set - moved
            check_invariant()
            continue
        local = {v: idx for idx, v in enumerate(ids)}
        if pivots:
            targets = sorted(pivots.values())
            pivot = targets[0]
            members = {local[pivot]}
            for t in targets[1:]:
                path = _shortest_path(sub, local[pivot], local[t])
                members.update(path)
        else:
            members = {min(local.values())}
        y = VertexSet.from_iterable(n, (ids[v] for v in members))
        if len(y) > cap:
            raise AssertionError("supernode exceeded its diameter budget; bug")
        branch[i] = y
        c_set = c_set - y
        check_invariant()

    full_sets = []
    for v in range(h.n):
        combined = VertexSet.empty(n)
        for host in expansion[v]:
            combined = combined | branch[host]
        full_sets.append(combined)
    emb = MinorEmbedding(h, tuple(full_sets))
    check = validate_minor(g, emb)
    if not check.ok:
        raise AssertionError(f"embedding failed validation: {check.violation}")
    return EmbedResult("embedding", emb, None, c0, cap, checkpoints)


def _shortest_path(g: Graph, a: int, b: int) -> list[int]:
    """Deterministic BFS shortest path (lowest-id parents)."""
    if a == b:
        return [a]
    prev: dict[int, int] = {a: a}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = nxt
    if b not in prev:
        raise ValueError(f"no path between {a} and {b}")
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class HittingSetResult:
    """A connected set meeting every target, with its size-bound report."""

    y: VertexSet
    walk_length: int
    attempts: int
    size_bound: float
    preconditions_ok: bool
    notes: tuple[str, ...]


class HittingSetFailure(RuntimeError):
    """All retries exceeded the size bound; carries the attempt sizes."""

    def __init__(self, message: str, attempt_sizes: list[int]):
        super().__init__(f"{message}; attempt sizes {attempt_sizes}")
        self.attempt_sizes = attempt_sizes


def connected_hitting_set(
    g: Graph,
    targets: Sequence,
    beta: float,
    seed: int = 0,
    walk_length: int | None = None,
    max_attempts: int = 32,
    exact_limit: int = EXACT_CUT_LIMIT,
) -> HittingSetResult:
    """Connected set intersecting every target, built from a lazy-walk trace.

    The walk runs (8/beta^3) (n/s) ln(ks/n) steps from the stationary law
    (s = smallest target size); unhit targets are attached by shortest
    paths, redundant leaves are pruned, and the attempt repeats with a fresh
    sub-stream while the result exceeds twice the expected-size bound. The
    edge-isoperimetric hypothesis i(G) >= beta * max_degree is verified
    exactly at desk scale and flagged otherwise.
    """
    if not targets:
        raise ValueError("need at least one target")
    targets = [as_vertex_set(g.n, t) for t in targets]
    if any(not t for t in targets):
        raise ValueError("targets must be non-empty")
    if not 0 < beta <= 1:
        raise ValueError("beta must lie in (0, 1]")
    notes: list[str] = []
    s = min(len(t) for t in targets)
    k = len(targets)
    n = g.n
    preconditions_ok = True
    if k * s < 2 * n:
        preconditions_ok = False
        notes.append(f"k*s = {k * s} < 2n: the size bound is not meaningful")
    if g.n <= exact_limit:
        i_val = float(cheeger_exact(g, exact_limit).i)
        if i_val < beta * g.max_degree:
            preconditions_ok = False
            notes.append(
                f"isoperimetric hypothesis fails exactly: i={i_val:.4f} < beta*d"
            )
    else:
        notes.append("isoperimetric hypothesis asserted, not verified (n over desk scale)")
    ratio = k * s / n
    expected = (8.0 / beta**3) * (n / s) * math.log(ratio) if ratio > 1 else 0.0
    overridden = walk_length is not None
    if walk_length is None:
        walk_length = max(0, math.ceil(expected))
    if overridden or ratio <= 1:
        # the analytic size bound only speaks about the formula walk length
        size_bound = math.inf
        if overridden:
            notes.append("walk length overridden: size-bound retries disabled")
    else:
        size_bound = max(1.0, 2.0 * expected)

    attempt_sizes: list[int] = []
    for attempt in range(max_attempts):
        trace = lazy_walk(g, walk_length, start="stationary",
                          seed=derive_seed(seed, attempt))
        members = set(trace.steps)
        for t in targets:
            if any(v in members for v in t):
                continue
            path = _multi_source_path(g, members, t)
            members.update(path)
        members = _prune_hitting_set(g, members, targets)
        attempt_sizes.append(len(members))
        if len(members) <= size_bound:
            y = VertexSet.from_iterable(g.n, members)
            sub, _ = induce(g, y)
            if not sub.is_connected():
                raise AssertionError("hitting set lost connectivity; bug")
            return HittingSetResult(
                y=y,
                walk_length=walk_length,
                attempts=attempt + 1,
                size_bound=size_bound,
                preconditions_ok=preconditions_ok,
                notes=tuple(notes),
            )
    raise HittingSetFailure(
        "every attempt exceeded twice the expected size bound "
        "(the hypothesis is likely violated)",
        attempt_sizes,
    )


def _multi_source_path(g: Graph, sources: set[int], target: VertexSet) -> list[int]:
    """Shortest path from any source to the target set (deterministic BFS)."""
    prev: dict[int, int] = {v: v for v in sources}
    frontier = sorted(sources)
    while frontier:
        for v in frontier:
            if v in target:
                path = [v]
                while prev[path[-1]] != path[-1]:
                    path.append(prev[path[-1]])
                return path
        nxt = []
        for v in frontier:
            for w in g.adj[v]:
                if w not in prev:
                    prev[w] = v
                    nxt.append(w)
        frontier = sorted(nxt)
    raise ValueError("target unreachable from the walk trace")


def _prune_hitting_set(g: Graph, members: set[int], targets) -> set[int]:
    """Drop spanning-tree leaves whose removal keeps every target hit."""
    members = set(members)
    hit_count = [sum(1 for v in members if v in t) for t in targets]
    covering = {v: [i for i, t in enumerate(targets) if v in t] for v in members}
    changed = True
    while changed and len(members) > 1:
        changed = False
        root = min(members)
        parent = {root: root}
        order = [root]
        for v in order:
            for w in g.adj[v]:
                if w in members and w not in parent:
                    parent[w] = v
                    order.append(w)
        children_count = {v: 0 for v in members}
        for v, p in parent.items():
            if v != p:
                children_count[p] += 1
        for v in sorted(members):
            if v == root or children_count[v]:
                continue
            if all(hit_count[i] >= 2 for i in covering[v]):
                members.remove(v)
                children_count[parent[v]] -= 1
                for i in covering[v]:
                    hit_count[i] -= 1
                changed = True
    return members


@dataclass(frozen=True)
class CliqueMinorResult:
    """Outcome of the supernode loop; failures carry the edge-count ledger."""

    kind: str  # 'minor' | 'failure'
    embedding: Optional[MinorEmbedding]
    k: int
    b: int
    beta: float
    c_effective: float | None
    hypothesis_ok: bool
    notes: tuple[str, ...]
    evidence: dict


def clique_minor(
    g: Graph,
    alpha: float,
    seed: int = 0,
    b: int | None = None,
    k: int | None = None,
    beta: float | None = None,
    walk_length: int | None = None,
    pad_dummy_targets: bool = True,
    exact_cut_limit: int = EXACT_CUT_LIMIT,
) -> CliqueMinorResult:
    """Build a complete-minor embedding with lazy-walk hitting sets.

    Defaults follow the theorem's constants: beta = alpha/4,
    b = ceil(sqrt(8C/alpha * n)) with C = 8/beta^3, k = floor(alpha n / (6b)).
    At desk scale those produce k < 2, so (b, k, beta, walk_length,
    pad_dummy_targets) may be overridden; overridden runs are still sound
    because every embedding is validated structurally. The contradiction
    branch (the dump set exceeding n/3) is reported as hypothesis-violation
    evidence with its edge-count ledger, never silently.
    """
    n = g.n
    d = g.max_degree
    if d == 0:
        raise ValueError("the graph has no edges")
    notes: list[str] = []
    if beta is None:
        beta = alpha / 4.0
    cc = 8.0 / beta**3
    if b is None:
        b = math.ceil(math.sqrt(8.0 * cc / alpha * n))
    if k is None:
        k = max(1, math.floor(alpha * n / (6.0 * b)))
    if b < 1 or k < 1:
        raise ValueError("b and k must be positive; override them at desk scale")
    if b * k * 3 > n:
        notes.append(
            f"supernodes occupy {b * k} > n/3 vertices; the loop may starve"
        )
    hypothesis_ok = True
    if n <= exact_cut_limit:
        i_val = float(cheeger_exact(g, exact_cut_limit).i)
        if i_val < alpha * d:
            hypothesis_ok = False
            notes.append(f"i(G) = {i_val:.4f} < alpha*d = {alpha * d:.4f} (exact)")
    else:
        notes.append("i(G) >= alpha*d asserted, not verified (n over desk scale)")

    a_set = VertexSet.empty(n)
    c_set = VertexSet.full(n)
    branch: dict[int, VertexSet] = {}
    s = max(1, math.ceil(beta * b))
    dummy_counter = 0
    evict_threshold = beta * d

    def edge_count(u: VertexSet, w: VertexSet) -> int:
        return boundary(g, u, w).crossing_edges

    while True:
        if 3 * len(a_set) > n:
            cross = boundary(g, a_set).crossing_edges
            e_ab = sum(edge_count(a_set, bs) for bs in branch.values())
            e_ac = edge_count(a_set, c_set)
            evidence = {
                "a_size": len(a_set),
                "edges_a_to_rest": cross,
                "edges_a_to_supernodes": e_ab,
                "edges_a_to_reservoir": e_ac,
                "required_cut_edges": alpha * d * n / 3.0,
            }
            return CliqueMinorResult(
                kind="failure", embedding=None, k=k, b=b, beta=beta,
                c_effective=None, hypothesis_ok=hypothesis_ok,
                notes=tuple(notes + ["dump set exceeded n/3: the edge-count "
                                     "contradiction did not hold on this input"]),
                evidence=evidence,
            )
        if len(branch) == k:
            break
        # evict supernodes with a weak boundary into the reservoir
        weak = None
        for i in sorted(branch):
            if edge_count(branch[i], c_set) < evict_threshold * b:
                weak = i
                break
        if weak is not None:
            a_set = a_set | branch[weak]
            del branch[weak]
            continue
        # sparse cut inside the reservoir
        sub, ids = induce(g, c_set)
        moved = _reservoir_sparse_cut(sub, evict_threshold, exact_cut_limit)
        if moved is not None:
            orig = VertexSet.from_iterable(n, (ids[v] for v in moved))
            a_set = a_set | orig
            c_set = c_set - orig
            continue
        # the reservoir expands: hit every supernode boundary with one walk
        targets_local = []
        for i in sorted(branch):
            nb = boundary(g, branch[i], c_set).external_neighborhood
            if len(nb) < s:
                notes.append(
                    f"supernode {i} boundary shrank below s = {s}; evicting"
                )
                a_set = a_set | branch[i]
                del branch[i]
                break
            targets_local.append(
                VertexSet.from_iterable(sub.n, (ids.index(v) for v in nb))
            )
        else:
            if pad_dummy_targets:
                rng_targets = max(0, math.floor(2 * sub.n / s) + 1 - len(targets_local))
                for _ in range(rng_targets):
                    from .seeding import substream

                    rng = substream(seed, 1_000_000 + dummy_counter)
                    dummy_counter += 1
                    picks = rng.choice(sub.n, size=min(s, sub.n), replace=False)
                    targets_local.append(
                        VertexSet.from_iterable(sub.n, picks.tolist())
                    )
            try:
                if targets_local:
                    hit = connected_hitting_set(
                        sub, targets_local, beta,
                        seed=derive_seed(seed, len(branch), dummy_counter),
                        walk_length=walk_length,
                    )
                    y_local = set(hit.y)
                else:
                    y_local = {0}
            except HittingSetFailure as exc:
                return CliqueMinorResult(
                    kind="failure", embedding=None, k=k, b=b, beta=beta,
                    c_effective=None, hypothesis_ok=hypothesis_ok,
                    notes=tuple(notes + [f"hitting set failed: {exc}"]),
                    evidence={"attempt_sizes": exc.attempt_sizes},
                )
            y_local = _extend_connected(sub, y_local, b)
            if y_local is None:
                return CliqueMinorResult(
                    kind="failure", embedding=None, k=k, b=b, beta=beta,
                    c_effective=None, hypothesis_ok=hypothesis_ok,
                    notes=tuple(notes + ["reservoir too small to host a supernode"]),
                    evidence={"reservoir": sub.n, "needed": b},
                )
            idx = next(i for i in range(k) if i not in branch)
            y = VertexSet.from_iterable(n, (ids[v] for v in y_local))
            branch[idx] = y
            c_set = c_set - y

    import itertools

    target = Graph(k, itertools.combinations(range(k), 2))
    emb = MinorEmbedding(target, tuple(branch[i] for i in range(k)))
    check = validate_minor(g, emb)
    if not check.ok:
        raise AssertionError(f"clique minor failed validation: {check.violation}")
    return CliqueMinorResult(
        kind="minor", embedding=emb, k=k, b=b, beta=beta,
        c_effective=k / math.sqrt(n), hypothesis_ok=hypothesis_ok,
        notes=tuple(notes), evidence={},
    )


def _reservoir_sparse_cut(sub: Graph, threshold: float, exact_limit: int):
    """A set U, |U| <= |C|/2, with e(U, C-U) < threshold * |U|, or None."""
    if sub.n < 2:
        return None
    comps = sub.components()
    if len(comps) > 1:
        return min(comps, key=len)
    if sub.n <= exact_limit:
        rep = cheeger_exact(sub, exact_limit)
        if float(rep.i) < threshold:
            return rep.i_cut.cut_set
        return None
    cut, _mu = sweep_cut_with_mu(sub)
    for side in (cut.cut_set, cut.cut_set.complement()):
        if 1 <= len(side) <= sub.n // 2:
            cross = boundary(sub, side).crossing_edges
            if cross < threshold * len(side):
                return side
    return None


def _extend_connected(g: Graph, members: set[int], size: int) -> set[int] | None:
    """Grow a connected set to exactly ``size`` vertices by BFS (min-id order)."""
    members = set(members)
    if len(members) > size:
        return None  # cannot shrink without losing hits
    frontier = sorted(members)
    while len(members) < size:
        added = None
        for v in frontier:
            for w in sorted(g.adj[v]):
                if w not in members:
                    added = w
                    break
            if added is not None:
                break
        if added is None:
            return None
        members.add(added)
        frontier.append(added)
    return members


def ccl_bruteforce(g: Graph, size_limit: int = CCL_LIMIT) -> int:
    """Largest k admitting a partition of some vertex subset into k connected,
    pairwise adjacent parts; exact recursive search with pruning (n <= 10)."""
    if g.n > size_limit:
        raise ValueError(f"exact clique-contraction search limited to n <= {size_limit}")
    n = g.n
    if n == 0:
        return 0
    masks = g.adjacency_masks
    full = (1 << n) - 1

    nbr_of_mask: dict[int, int] = {0: 0}

    def nbrs(mask: int) -> int:
        got = nbr_of_mask.get(mask)
        if got is None:
            low = mask & -mask
            got = nbrs(mask ^ low) | masks[low.bit_length() - 1]
            nbr_of_mask[mask] = got
        return got

    connected_cache: dict[int, bool] = {}

    def connected(mask: int) -> bool:
        got = connected_cache.get(mask)
        if got is None:
            start = mask & -mask
            seen = start
            while True:
                grown = (seen | (nbrs(seen) & mask)) & mask
                if grown == seen:
                    break
                seen = grown
            got = seen == mask
            connected_cache[mask] = got
        return got

    def joinable(part: int, remaining: int) -> bool:
        # all of `part` must lie in one component of G[part | remaining]
        scope = part | remaining
        seen = part & -part
        while True:
            grown = (seen | nbrs(seen)) & scope
            if grown == seen:
                break
            seen = grown
        return part & ~seen == 0

    best = 0

    def search(next_vertex: int, parts: list[int]):
        nonlocal best
        if len(parts) + (n - next_vertex) <= best:
            return
        if next_vertex == n:
            if all(connected(p) for p in parts) and all(
                nbrs(parts[i]) & parts[j]
                for i in range(len(parts))
                for j in range(i + 1, len(parts))
            ):
                best = max(best, len(parts))
            return
        remaining = full & ~((1 << (next_vertex + 1)) - 1)
        bit = 1 << next_vertex
        # open a new part first: finds large counts early for better pruning
        parts.append(bit)
        if all(joinable(p, remaining) for p in parts):
            search(next_vertex + 1, parts)
        parts.pop()
        # extend an existing part
        for i, p in enumerate(parts):
            parts[i] = p | bit
            if joinable(parts[i], remaining):
                search(next_vertex + 1, parts)
            parts[i] = p
        # leave the vertex unused
        if all(joinable(p, remaining) for p in parts):
            search(next_vertex + 1, parts)

    search(0, [])
    return best
