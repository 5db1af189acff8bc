"""Depth-first search structure, long paths and cycles, and cycle-length families.

The DFS here is the stack formulation with an explicit vertex priority:
explored set S, unvisited set T, and a stack U that always spans a path.
Its four structural properties (one move per round; no S-T edges; U spans a
path; non-tree edges join ancestor-descendant pairs) drive every
construction in this module and can be re-validated on any run.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .graph import Graph, VertexSet, as_vertex_set, boundary, induce


@dataclass(frozen=True)
class DfsForest:
    """Spanning forest with discovery/finish times on one shared event clock.

    ``parent[v]`` is None for roots; ``disc``/``fin`` are indices into the
    2n-event sequence (push and pop events interleaved), so ancestor tests
    are interval containment: u is an ancestor of v iff
    disc[u] <= disc[v] and fin[v] <= fin[u].
    """

    n: int
    parent: tuple[Optional[int], ...]
    disc: tuple[int, ...]
    fin: tuple[int, ...]
    roots: tuple[int, ...]
    order_sigma: tuple[int, ...]

    def tree_edges(self) -> set[tuple[int, int]]:
        return {
            (min(v, p), max(v, p))
            for v, p in enumerate(self.parent)
            if p is not None
        }

    def is_ancestor(self, u: int, v: int) -> bool:
        return self.disc[u] <= self.disc[v] and self.fin[v] <= self.fin[u]

    def children(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                out[p].append(v)
        for kids in out:
            kids.sort(key=lambda v: self.disc[v])
        return out

    def subtree_sizes(self) -> list[int]:
        sizes = [1] * self.n
        for v in sorted(range(self.n), key=lambda v: -self.disc[v]):
            p = self.parent[v]
            if p is not None:
                sizes[p] += sizes[v]
        return sizes

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out


@dataclass(frozen=True)
class _DfsRun:
    forest: DfsForest
    # the stack content (including the vertex being popped) at the first
    # moment |S| reached each size: snapshot_at_s_size[k] for requested k
    snapshots: dict[int, tuple[int, ...]]
    max_stack: tuple[int, ...]


def _dfs_run(g: Graph, sigma: Sequence[int] | None, snapshot_sizes: set[int]) -> _DfsRun:
    n = g.n
    if sigma is None:
        sigma = tuple(range(n))
    else:
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(n)):
            raise ValueError("sigma must be a permutation of the vertices")
    rank = [0] * n
    for pos, v in enumerate(sigma):
        rank[v] = pos
    adj_by_rank = [sorted(g.adj[v], key=lambda w: rank[w]) for v in range(n)]
    cursor = [0] * n
    visited = [False] * n
    parent: list[Optional[int]] = [None] * n
    disc = [-1] * n
    fin = [-1] * n
    roots: list[int] = []
    clock = 0
    s_size = 0
    stack: list[int] = []
    snapshots: dict[int, tuple[int, ...]] = {}
    max_stack: tuple[int, ...] = ()
    sigma_pos = 0
    while True:
        if not stack:
            while sigma_pos < n and visited[sigma[sigma_pos]]:
                sigma_pos += 1
            if sigma_pos == n:
                break
            root = sigma[sigma_pos]
            visited[root] = True
            disc[root] = clock
            clock += 1
            roots.append(root)
            stack.append(root)
            if len(stack) > len(max_stack):
                max_stack = tuple(stack)
            continue
        v = stack[-1]
        nxt = None
        while cursor[v] < len(adj_by_rank[v]):
            w = adj_by_rank[v][cursor[v]]
            if not visited[w]:
                nxt = w
                break
            cursor[v] += 1
        if nxt is None:
            stack.pop()
            fin[v] = clock
            clock += 1
            s_size += 1
            if s_size in snapshot_sizes:
                snapshots[s_size] = tuple(stack + [v])
        else:
            visited[nxt] = True
            parent[nxt] = v
            disc[nxt] = clock
            clock += 1
            stack.append(nxt)
            if len(stack) > len(max_stack):
                max_stack = tuple(stack)
    forest = DfsForest(
        n=n,
        parent=tuple(parent),
        disc=tuple(disc),
        fin=tuple(fin),
        roots=tuple(roots),
        order_sigma=sigma,
    )
    return _DfsRun(forest=forest, snapshots=snapshots, max_stack=max_stack)


def dfs(g: Graph, sigma: Sequence[int] | None = None, validate: bool = False) -> DfsForest:
    """Run the priority DFS; optionally re-validate its structural properties."""
    forest = _dfs_run(g, sigma, set()).forest
    if validate:
        problems = validate_dfs_properties(g, forest)
        if problems:
            raise AssertionError("; ".join(problems))
    return forest


def validate_dfs_properties(g: Graph, f: DfsForest) -> list[str]:
    """Check the four DFS properties on a finished forest; returns violations."""
    problems = []
    # one move per round: push and pop events fill the 2n-clock exactly
    events = sorted(f.disc) + sorted(f.fin)
    if sorted(events) != list(range(2 * g.n)):
        problems.append("event clock is not a permutation of 2n moves")
    # forest components match graph components vertex-wise
    comp_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
    for v, p in enumerate(f.parent):
        if p is not None:
            if not g.has_edge(v, p):
                problems.append(f"tree edge ({p}, {v}) not in the graph")
            if comp_of[v] != comp_of[p]:
                problems.append(f"tree edge ({p}, {v}) crosses components")
    # no S-T edge was ever revealed: for every edge, neither endpoint finished
    # before the other was discovered
    for u, v in g.edges:
        if f.fin[u] < f.disc[v] or f.fin[v] < f.disc[u]:
            problems.append(f"edge ({u}, {v}) joined explored and unvisited sets")
    # non-tree edges join ancestor-descendant pairs
    tree = f.tree_edges()
    for u, v in g.edges:
        if (u, v) in tree:
            continue
        if not (f.is_ancestor(u, v) or f.is_ancestor(v, u)):
            problems.append(f"non-tree edge ({u}, {v}) is not ancestral")
    return problems


@dataclass(frozen=True)
class PathResult:
    """Either a path (vertex sequence) or a small-boundary witness set."""

    kind: str  # 'path' | 'witness'
    vertices: tuple[int, ...] | None
    witness: Optional[VertexSet]
    boundary_size: int | None

    @property
    def length(self) -> int:
        if self.kind != "path":
            raise ValueError("no path in a witness result")
        return len(self.vertices) - 1


def long_path(g: Graph, k: int, ell: int, sigma: Sequence[int] | None = None) -> PathResult:
    """Path of length ell, or the k explored vertices as a witness.

    Runs the DFS and inspects the first moment exactly k vertices are
    explored: the stack (including the vertex just moved) spans a path; if
    it holds at least ell+1 vertices that path is returned, otherwise the
    explored set S is a certified witness with |N(S)| < ell.
    """
    if not 0 < k < g.n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={g.n}")
    run = _dfs_run(g, sigma, {k})
    stack_before = run.snapshots[k]
    if len(stack_before) >= ell + 1:
        path = stack_before
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise AssertionError("DFS stack does not span a path; bug")
        return PathResult("path", path, None, None)
    # reconstruct S at that moment: the k vertices with the earliest fin
    order = sorted(range(g.n), key=lambda v: run.forest.fin[v])
    s_set = VertexSet.from_iterable(g.n, order[:k])
    nb = len(boundary(g, s_set).external_neighborhood)
    if nb >= ell:
        raise AssertionError("witness has a large boundary; bug")
    return PathResult("witness", None, s_set, nb)


def longest_stack_path(g: Graph, sigma: Sequence[int] | None = None) -> tuple[int, ...]:
    """The longest path the DFS stack ever spans (used by the cycle family)."""
    return _dfs_run(g, sigma, set()).max_stack


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle as a cyclic vertex sequence; length = vertex count."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("cycles have at least 3 vertices")
        if len(set(vs)) != len(vs):
            raise ValueError("cycle repeats a vertex")
        for a, b in zip(vs, vs[1:] + vs[:1]):
            if not g.has_edge(a, b):
                raise ValueError(f"cycle edge ({a}, {b}) missing from the graph")


@dataclass(frozen=True)
class LongCycleResult:
    kind: str  # 'cycle' | 'violation'
    cycle: Optional[CycleWitness]
    witness: Optional[VertexSet]
    boundary_size: int | None
    trace: dict


def long_cycle(g: Graph, k: int, ell: int, sigma: Sequence[int] | None = None) -> LongCycleResult:
    """Cycle of length at least ell+1, or a mid-sized set with |N| < ell.

    Follows the tree construction: descend to the deepest vertex whose
    subtree exceeds k, bundle children subtrees totalling between k/2 and k
    into W, and close a cycle through the farthest root-path neighbor of W.
    When the produced cycle is shorter than ell+1, W itself certifies the
    hypothesis violation.
    """
    if not 0 < k < g.n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={g.n}")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    comps = g.components()
    big = [c for c in comps if len(c) > k]
    if not big:
        # assemble a union of components with total size in [k/2, k]
        members: list[int] = []
        for comp in sorted(comps, key=len):
            if len(members) + len(comp) <= k:
                members.extend(comp)
            elif 2 * len(comp) >= k:
                members = list(comp)
            if 2 * len(members) >= k:
                break
        w = VertexSet.from_iterable(g.n, members)
        nb = len(boundary(g, w).external_neighborhood)
        return LongCycleResult(
            "violation", None, w, nb, {"reason": "no component larger than k"}
        )
    comp = big[0]
    sub, ids = induce(g, comp)
    local_sigma = None
    if sigma is not None:
        rank = {v: i for i, v in enumerate(sigma)}
        local_sigma = sorted(range(sub.n), key=lambda v: rank[ids[v]])
    forest = _dfs_run(sub, local_sigma, set()).forest
    sizes = forest.subtree_sizes()
    children = forest.children()
    v = forest.roots[0]
    while True:
        nxt = None
        for c in children[v]:
            if sizes[c] > k:
                nxt = c
                break
        if nxt is None:
            break
        v = nxt
    # bundle children subtrees until the union size lands in [k/2, k]
    bundle: list[int] = []
    total = 0
    for c in children[v]:
        if total + sizes[c] <= k:
            bundle.append(c)
            total += sizes[c]
        elif 2 * sizes[c] >= k:
            bundle, total = [c], sizes[c]
        if 2 * total >= k:
            break
    if not 2 * total >= k:
        raise AssertionError("child bundling failed; bug")
    w_members = [
        x
        for x in range(sub.n)
        if any(forest.is_ancestor(c, x) for c in bundle)
    ]
    w_local = VertexSet.from_iterable(sub.n, w_members)
    p_path = forest.path_to_root(v)[::-1]  # root .. v
    on_p = set(p_path)
    nw = boundary(sub, w_local).external_neighborhood
    if not set(nw) <= on_p:
        raise AssertionError("W has a neighbor off the root path; bug")
    pos_on_p = {x: i for i, x in enumerate(p_path)}
    v_star = min(nw, key=lambda x: (pos_on_p[x], x), default=None)
    if v_star is None:
        w_orig = VertexSet.from_iterable(g.n, (ids[x] for x in w_local))
        return LongCycleResult(
            "violation", None, w_orig, 0, {"reason": "W has empty boundary"}
        )
    w_nbr = min(x for x in sub.adj[v_star] if x in set(w_members))
    # cycle: tree path w_nbr -> v_star (through v), then edge (w_nbr, v_star)
    up = forest.path_to_root(w_nbr)
    cycle_local = up[: up.index(v_star) + 1]
    cycle_orig = tuple(ids[x] for x in cycle_local)
    trace = {
        "component_size": sub.n,
        "branch_vertex": ids[v],
        "bundle_sizes": [sizes[c] for c in bundle],
        "w_size": total,
        "v_star": ids[v_star],
        "closing_vertex": ids[w_nbr],
        "root_path_length": len(p_path) - 1,
    }
    if len(cycle_orig) >= ell + 1:
        witness = CycleWitness(cycle_orig)
        witness.validate(g)
        return LongCycleResult("cycle", witness, None, None, trace)
    w_orig = VertexSet.from_iterable(g.n, (ids[x] for x in w_members))
    nb = len(boundary(g, w_orig).external_neighborhood)
    if nb >= ell:
        raise AssertionError("short cycle with a large-boundary W; bug")
    return LongCycleResult("violation", None, w_orig, nb, trace)


@dataclass(frozen=True)
class ColorClassPathReport:
    """Outcome of the color-class long-path search with its peel evidence."""

    kind: str  # 'path' | 'failure'
    path: tuple[int, ...] | None
    failed_precondition: str | None
    peel_removed: tuple[int, ...]
    surviving_vertices: int
    hypothesis_checked: str  # 'exhaustive' | 'heuristic' | 'skipped'
    hypothesis_ok: Optional[bool]


def path_in_color_class(
    g: Graph,
    e0: Iterable[tuple[int, int]],
    r: float,
    d: float,
    n_target: int,
    check_hypothesis: bool = True,
) -> ColorClassPathReport:
    """Find a path of length n_target inside the edge subset e0.

    Peels the subgraph (V, e0) to minimum degree d/(2r), then runs the DFS
    path search with k = ell = n_target. The sparsity hypothesis (every set
    of at most 2*n_target vertices spans at most (d/8r)|W| edges) is checked
    on the host graph, exhaustively when feasible, and the result is flagged
    accordingly. Failures name the precondition that broke and carry the
    peel trace as evidence.
    """
    e0 = {(min(e), max(e)) for e in e0}
    host_edges = set(g.edges)
    for e in e0:
        if e not in host_edges:
            raise ValueError(f"edge {e} of e0 is not an edge of the graph")
    if len(e0) * r < g.num_edges:
        raise ValueError(
            f"|e0| = {len(e0)} is below |E|/r = {g.num_edges / r:.1f}"
        )
    avg_degree = 2 * g.num_edges / g.n if g.n else 0.0
    if avg_degree < d:
        raise ValueError(f"average degree {avg_degree:.2f} is below d = {d}")

    hypothesis_checked = "skipped"
    hypothesis_ok: Optional[bool] = None
    if check_hypothesis:
        from .generators import check_locally_sparse

        cap_fraction = min(0.999, 2 * n_target / g.n)
        c2 = d / (8 * r)
        if c2 > 1:
            rep = check_locally_sparse(g, c2, cap_fraction)
            hypothesis_checked = "exhaustive" if rep.exhaustive else "heuristic"
            hypothesis_ok = rep.is_locally_sparse(c2)
        else:
            hypothesis_checked = "skipped"  # threshold too low to be meaningful

    sub0 = Graph(g.n, e0)
    threshold = d / (2 * r)
    deg = list(sub0.deg)
    alive = [True] * g.n
    removed: list[int] = []
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive[v] and deg[v] < threshold:
                alive[v] = False
                removed.append(v)
                changed = True
                for w in sub0.adj[v]:
                    if alive[w]:
                        deg[w] -= 1
    survivors = [v for v in range(g.n) if alive[v]]
    if len(survivors) <= n_target:
        return ColorClassPathReport(
            kind="failure",
            path=None,
            failed_precondition=(
                "peeling to min degree d/2r left too few vertices: the "
                "sparsity hypothesis must have been violated"
            ),
            peel_removed=tuple(removed),
            surviving_vertices=len(survivors),
            hypothesis_checked=hypothesis_checked,
            hypothesis_ok=hypothesis_ok,
        )
    sub1, ids1 = induce(sub0, VertexSet.from_iterable(g.n, survivors))
    res = long_path(sub1, k=n_target, ell=n_target)
    if res.kind == "path":
        return ColorClassPathReport(
            kind="path",
            path=tuple(ids1[v] for v in res.vertices),
            failed_precondition=None,
            peel_removed=tuple(removed),
            surviving_vertices=len(survivors),
            hypothesis_checked=hypothesis_checked,
            hypothesis_ok=hypothesis_ok,
        )
    return ColorClassPathReport(
        kind="failure",
        path=None,
        failed_precondition=(
            "the explored-set boundary fell below the target length: the "
            "peeled color class does not expand as the hypothesis requires"
        ),
        peel_removed=tuple(removed),
        surviving_vertices=len(survivors),
        hypothesis_checked=hypothesis_checked,
        hypothesis_ok=hypothesis_ok,
    )


class BudgetExceeded(RuntimeError):
    """Enumeration ran past its operation budget; carries the partial result."""

    def __init__(self, message: str, partial: set[int]):
        super().__init__(message)
        self.partial = partial


def cycle_spectrum_bruteforce(
    g: Graph, budget: int = 20_000_000, size_limit: int = 16
) -> set[int]:
    """Exact set of simple cycle lengths by canonical rooted backtracking.

    Each cycle is enumerated from its smallest vertex; the operation budget
    turns pathological inputs into a BudgetExceeded carrying the lengths
    found so far.
    """
    if g.n > size_limit:
        raise ValueError(f"cycle spectrum oracle limited to n <= {size_limit}")
    lengths: set[int] = set()
    ops = 0
    masks = g.adjacency_masks

    def extend(root: int, tail: int, member_mask: int, count: int):
        nonlocal ops
        ops += 1
        if ops > budget:
            raise BudgetExceeded("cycle enumeration budget exceeded", lengths)
        for w in g.adj[tail]:
            if w == root and count >= 3:
                lengths.add(count)
            elif w > root and not (member_mask >> w) & 1:
                extend(root, w, member_mask | (1 << w), count + 1)

    for root in range(g.n):
        extend(root, root, 1 << root, 1)
    return lengths


@dataclass(frozen=True)
class CycleFamilyResult:
    """Cycles of pairwise distinct lengths from the level-window construction.

    This is a construction, not a certificate: when no qualifying level
    window exists or the spanning-subtree root fails to branch, the result
    reports 'inapplicable' instead of guessing.
    """

    status: str  # 'ok' | 'inapplicable'
    reason: str | None
    cycles: tuple[CycleWitness, ...]
    lengths: tuple[int, ...]
    window: tuple[int, int] | None
    window_span_used: int | None
    path_length: int | None
    max_consecutive_gap: int | None

    @property
    def count(self) -> int:
        return len(self.cycles)


def _bfs_tree(g: Graph, root: int) -> tuple[list[Optional[int]], list[int]]:
    parent: list[Optional[int]] = [None] * g.n
    level = [-1] * g.n
    level[root] = 0
    queue = [root]
    while queue:
        nxt = []
        for v in queue:
            for w in g.adj[v]:
                if level[w] < 0:
                    level[w] = level[v] + 1
                    parent[w] = v
                    nxt.append(w)
        queue = nxt
    return parent, level


def cycle_lengths_family(g: Graph, eps: float, root: int = 0) -> CycleFamilyResult:
    """Produce many cycles of pairwise distinct lengths in a bounded-degree graph.

    Construction: a BFS spanning tree from ``root``; a window of consecutive
    levels capturing at least (1-eps) n vertices (window span grown from
    ceil(log2 n) by doubling, capped at n); a long DFS path P inside the
    window; per-subtree highest P-vertices, spacing-filtered along P; a
    minimal subtree over those; cycles closed through a fixed vertex of the
    smaller branch. Every cycle is validated and all lengths are distinct.
    """
    if not 0 < eps < 0.5:
        raise ValueError("eps must lie in (0, 1/2)")
    if not g.is_connected():
        raise ValueError("the construction needs a connected graph")
    if not 0 <= root < g.n:
        raise ValueError("root out of range")
    n = g.n
    parent, level = _bfs_tree(g, root)
    depth = max(level)
    counts = [0] * (depth + 1)
    for v in range(n):
        counts[level[v]] += 1
    need = (1.0 - eps) * n

    # Windows start at level 1 at the earliest (level 0 is the root alone and
    # yields a single subtree); the span is grown by doubling from 1 so the
    # smallest sufficient window, hence the richest anchor family, is used.
    span = 1
    window = None
    while True:
        best = None  # (mass, start); smallest sufficient start wins
        if depth >= 1:
            total = sum(counts[1 : min(1 + span, depth) + 1])
            best = (total, 1)
            for start in range(2, depth - span + 1):
                total += counts[start + span] - counts[start - 1]
                if total > best[0]:
                    best = (total, start)
        if best is not None and best[0] >= need:
            window = (best[1], min(best[1] + span, depth))
            break
        if span >= n:
            return CycleFamilyResult(
                "inapplicable",
                f"no window of {span} consecutive levels holds {need:.0f} vertices",
                (), (), None, None, None, None,
            )
        span = min(2 * span, n)
    k0, k1 = window
    w_members = [v for v in range(n) if k0 <= level[v] <= k1]
    w_set = VertexSet.from_iterable(n, w_members)
    sub, ids = induce(g, w_set)
    path_local = longest_stack_path(sub)
    path = [ids[v] for v in path_local]
    pos_on_p = {v: i for i, v in enumerate(path)}

    # highest (smallest-level, then earliest) path vertex per k0-level subtree
    top_ancestor: dict[int, int] = {}

    def anchor(v: int) -> int:
        while level[v] > k0:
            v = parent[v]
        return v

    best_in_subtree: dict[int, int] = {}
    for v in path:
        a = anchor(v)
        cur = best_in_subtree.get(a)
        if cur is None or (level[v], pos_on_p[v]) < (level[cur], pos_on_p[cur]):
            best_in_subtree[a] = v
    x_all = sorted(best_in_subtree.values(), key=lambda v: pos_on_p[v])

    # spacing filter: consecutive chosen vertices at least span+1 apart on P
    x0: list[int] = []
    last = -10 * n
    for v in x_all:
        if pos_on_p[v] - last >= span + 1:
            x0.append(v)
            last = pos_on_p[v]
    if len(x0) < 2:
        return CycleFamilyResult(
            "inapplicable", "fewer than two spaced subtree anchors on the path",
            (), (), window, span, len(path) - 1, None,
        )

    # minimal BFS-subtree over x0: its root is the deepest common ancestor
    def ancestors(v: int) -> list[int]:
        out = [v]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out

    common = set(ancestors(x0[0]))
    for v in x0[1:]:
        common &= set(ancestors(v))
    r = max(common, key=lambda v: level[v])

    def branch_of(v: int) -> int:
        prev = v
        while prev != r and parent[prev] != r:
            prev = parent[prev]
        return prev  # child of r on the path to v, or r itself

    by_branch: dict[int, list[int]] = {}
    for v in x0:
        by_branch.setdefault(branch_of(v), []).append(v)
    if len(by_branch) < 2:
        return CycleFamilyResult(
            "inapplicable", "minimal subtree fails to branch at its root",
            (), (), window, span, len(path) - 1, None,
        )
    a_branch = min(by_branch, key=lambda b: (len(by_branch[b]), b))
    a_side = by_branch[a_branch]
    b_side = [v for v in x0 if branch_of(v) != a_branch]
    a = min(a_side, key=lambda v: pos_on_p[v])
    right = [v for v in b_side if pos_on_p[v] > pos_on_p[a]]
    left = [v for v in b_side if pos_on_p[v] < pos_on_p[a]]
    b0 = right if len(right) >= len(left) else left

    def tree_path_down(top: int, bottom: int) -> list[int]:
        out = [bottom]
        while out[-1] != top:
            out.append(parent[out[-1]])
        return out[::-1]

    cycles: list[CycleWitness] = []
    lengths: list[int] = []
    r_to_a = tree_path_down(r, a)
    for b in sorted(b0, key=lambda v: abs(pos_on_p[v] - pos_on_p[a])):
        lo, hi = sorted((pos_on_p[a], pos_on_p[b]))
        p_seg = path[lo : hi + 1]
        if p_seg[0] != a:
            p_seg = p_seg[::-1]
        b_to_r = tree_path_down(r, b)[::-1]
        cyc = tuple(r_to_a[:-1]) + tuple(p_seg[:-1]) + tuple(b_to_r[:-1])
        witness = CycleWitness(cyc)
        witness.validate(g)
        cycles.append(witness)
        lengths.append(witness.length)
    if len(set(lengths)) != len(lengths):
        raise AssertionError("cycle lengths are not pairwise distinct; bug")
    sorted_lengths = sorted(lengths)
    gap = max(
        (b - a for a, b in zip(sorted_lengths, sorted_lengths[1:])), default=None
    )
    return CycleFamilyResult(
        status="ok",
        reason=None,
        cycles=tuple(cycles),
        lengths=tuple(sorted_lengths),
        window=window,
        window_span_used=span,
        path_length=len(path) - 1,
        max_consecutive_gap=gap,
    )
