"""Independent brute-force oracles for cross-checking the library.

Everything here recomputes from scratch with itertools enumeration in a
different order than the library kernels, on purpose.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from expanders.graph import Graph


def neighborhood(g: Graph, members: set[int]) -> set[int]:
    out = set()
    for v in members:
        for w in g.adj[v]:
            if w not in members:
                out.add(w)
    return out


def internal_edges(g: Graph, members: set[int]) -> int:
    return sum(1 for u, v in g.edges if u in members and v in members)


def crossing_edges(g: Graph, members: set[int]) -> int:
    return sum(1 for u, v in g.edges if (u in members) != (v in members))


def brute_alpha(g: Graph, sizes) -> tuple[Fraction | None, set[int] | None]:
    """Exact min |N(U)|/|U| over subsets with |U| in sizes (descending scan)."""
    best: Fraction | None = None
    witness = None
    for size in sorted(set(sizes), reverse=True):
        if size < 1 or size > g.n:
            continue
        for combo in itertools.combinations(range(g.n), size):
            members = set(combo)
            ratio = Fraction(len(neighborhood(g, members)), size)
            if best is None or ratio < best:
                best, witness = ratio, members
    return best, witness


def brute_cheeger(g: Graph) -> Fraction:
    total = 2 * g.num_edges
    best: Fraction | None = None
    for size in range(1, g.n):
        for combo in itertools.combinations(range(g.n), size):
            members = set(combo)
            vol = sum(g.deg[v] for v in members)
            minvol = min(vol, total - vol)
            if minvol == 0:
                continue  # zero-volume splits define no bottleneck ratio
            ratio = Fraction(crossing_edges(g, members), minvol)
            if best is None or ratio < best:
                best = ratio
    assert best is not None
    return best


def brute_isoperimetric(g: Graph) -> Fraction:
    best: Fraction | None = None
    for size in range(1, g.n // 2 + 1):
        for combo in itertools.combinations(range(g.n), size):
            members = set(combo)
            ratio = Fraction(crossing_edges(g, members), size)
            if best is None or ratio < best:
                best = ratio
    assert best is not None
    return best


def brute_densest(g: Graph, cap: int) -> Fraction:
    best = Fraction(0)
    for size in range(1, cap + 1):
        for combo in itertools.combinations(range(g.n), size):
            ratio = Fraction(internal_edges(g, set(combo)), size)
            best = max(best, ratio)
    return best


def brute_min_separator_size(g: Graph) -> int | None:
    """Minimum |S| over partitions V = A+S+B, sides <= floor(2n/3), no A-B edges."""
    n = g.n
    cap = (2 * n) // 3
    for size in range(0, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            rest = [v for v in range(n) if v not in s]
            # try every 2-coloring of remaining components
            comps = []
            seen: set[int] = set()
            for v in rest:
                if v in seen:
                    continue
                comp = {v}
                stack = [v]
                seen.add(v)
                while stack:
                    x = stack.pop()
                    for y in g.adj[x]:
                        if y not in s and y not in seen:
                            seen.add(y)
                            comp.add(y)
                            stack.append(y)
                comps.append(comp)
            sizes = [len(c) for c in comps]
            total = sum(sizes)
            for assign in itertools.product([0, 1], repeat=len(comps)):
                a = sum(sz for sz, side in zip(sizes, assign) if side == 0)
                if a <= cap and total - a <= cap:
                    return size
    return None


def brute_cycle_lengths(g: Graph) -> set[int]:
    """All simple cycle lengths via rooted path enumeration."""
    lengths: set[int] = set()

    def extend(path: list[int], members: set[int]):
        root = path[0]
        tail = path[-1]
        for w in g.adj[tail]:
            if w == root and len(path) >= 3:
                lengths.add(len(path))
            elif w > root and w not in members:
                path.append(w)
                members.add(w)
                extend(path, members)
                members.remove(w)
                path.pop()

    for root in range(g.n):
        extend([root], {root})
    return lengths
