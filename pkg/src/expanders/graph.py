"""Immutable simple undirected graphs and the primitive set operations.

Vertices are dense integer ids ``0..n-1``. Vertex sets are bitsets so the
exhaustive oracles (which enumerate up to ``2**n`` subsets) get cheap set
algebra. Distances between disconnected vertices are reported as the
distinct value :data:`INFINITE`, never as a sentinel integer.
"""

from __future__ import annotations

import bisect
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

INFINITE = math.inf

# Bitset adjacency is only materialized for graphs up to this order; all
# desk-scale (exhaustive) routines operate far below it.
_MASK_LIMIT = 4096


class VertexSet:
    """Immutable set of vertices of an ``n``-vertex graph, stored as a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} has bits outside [0, {n})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, *a):  # immutability
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        # byte-buffer construction keeps this linear even for huge n
        buf = bytearray((n + 7) // 8)
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range [0, {n})")
            buf[v >> 3] |= 1 << (v & 7)
        return cls(n, int.from_bytes(buf, "little"))

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets over different ground sets")

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask ^ other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def to_tuple(self) -> tuple[int, ...]:
        return tuple(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


def as_vertex_set(n: int, vertices) -> VertexSet:
    """Coerce an iterable of vertex ids (or a VertexSet) to a VertexSet."""
    if isinstance(vertices, VertexSet):
        if vertices.n != n:
            raise ValueError("vertex set is over a different ground set")
        return vertices
    return VertexSet.from_iterable(n, vertices)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Self-loops are rejected; parallel and reversed duplicate edges collapse.
    Instances are safe to share across threads: every operation in this
    package is a pure function of its inputs.
    """

    __slots__ = ("n", "edges", "adj", "deg", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "deg", tuple(len(a) for a in adj))

    def __setattr__(self, *a):
        raise AttributeError("Graph is immutable")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.deg[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    @property
    def max_degree(self) -> int:
        return max(self.deg, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.deg, default=0)

    @property
    def is_regular(self) -> bool:
        return self.n > 0 and self.min_degree == self.max_degree

    def volume(self, vertices) -> int:
        """Sum of degrees over a vertex set."""
        return sum(self.deg[v] for v in vertices)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        if len(a) > 8:
            i = bisect.bisect_left(a, v)
            return i < len(a) and a[i] == v
        return v in a

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (only for graphs up to _MASK_LIMIT)."""
        if self.n > _MASK_LIMIT:
            raise RuntimeError(
                f"bitset adjacency not built for n={self.n} > {_MASK_LIMIT}"
            )
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by smallest contained vertex."""
        seen = [False] * self.n
        out: list[VertexSet] = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            members = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        members.append(w)
                        queue.append(w)
            out.append(VertexSet.from_iterable(self.n, members))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


@dataclass(frozen=True)
class BoundaryStats:
    """External neighborhood and edge counts of a vertex set.

    ``touching_edges`` counts every edge with at least one endpoint in the
    set, so ``touching_edges == internal_edges + crossing_edges`` always.
    """

    external_neighborhood: VertexSet
    crossing_edges: int
    internal_edges: int

    @property
    def touching_edges(self) -> int:
        return self.internal_edges + self.crossing_edges


def boundary(g: Graph, u, w=None) -> BoundaryStats:
    """Neighborhood of ``u`` inside ``w`` (default: everything outside ``u``).

    ``crossing_edges`` counts u-to-w edges exactly; ``internal_edges`` counts
    edges with both endpoints in ``u``. Raises ValueError if ``u`` and ``w``
    overlap.
    """
    u = as_vertex_set(g.n, u)
    if w is not None:
        w = as_vertex_set(g.n, w)
        if not u.isdisjoint(w):
            raise ValueError("u and w must be disjoint")
    u_mask = u.mask
    w_mask = w.mask if w is not None else ~u_mask & ((1 << g.n) - 1)
    ext_mask = 0
    crossing = 0
    internal2 = 0  # internal edge endpoints, i.e. twice the internal count
    for v in u:
        for x in g.adj[v]:
            bit = 1 << x
            if bit & u_mask:
                internal2 += 1
            elif bit & w_mask:
                crossing += 1
                ext_mask |= bit
    return BoundaryStats(
        external_neighborhood=VertexSet(g.n, ext_mask),
        crossing_edges=crossing,
        internal_edges=internal2 // 2,
    )


def distances(g: Graph, v: int) -> list[float]:
    """BFS distances from ``v``; unreachable vertices get INFINITE."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range [0, {g.n})")
    dist: list[float] = [INFINITE] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if dist[y] == INFINITE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def ball(g: Graph, v: int, t: int) -> VertexSet:
    """All vertices at BFS distance at most ``t`` from ``v``; ball(v, 0) = {v}."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range [0, {g.n})")
    if t < 0:
        raise ValueError("radius must be non-negative")
    mask = 1 << v
    frontier = [v]
    for _ in range(t):
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                bit = 1 << y
                if not mask & bit:
                    mask |= bit
                    nxt.append(y)
        if not nxt:
            break
        frontier = nxt
    return VertexSet(g.n, mask)


def eccentricity(g: Graph, v: int) -> float:
    return max(distances(g, v))


def diameter(g: Graph) -> float:
    """Max over vertex pairs of shortest-path distance; INFINITE iff disconnected."""
    if g.n == 0:
        return 0
    best = 0.0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc == INFINITE:
            return INFINITE
        best = max(best, ecc)
    return int(best)


def induce(g: Graph, u) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``u`` with vertices relabeled to ``0..|u|-1``.

    Returns ``(subgraph, ids)`` where ``ids[i]`` is the original id of the
    new vertex ``i``, so results map back to the input graph.
    """
    u = as_vertex_set(g.n, u)
    if not u:
        raise ValueError("cannot induce on the empty vertex set")
    ids = u.to_tuple()
    new_id = {old: new for new, old in enumerate(ids)}
    edges = [
        (new_id[a], new_id[b]) for a, b in g.edges if a in new_id and b in new_id
    ]
    return Graph(len(ids), edges), ids


def subdivide(g: Graph, ell: int) -> Graph:
    """Replace each edge with a path through ``ell`` fresh internal vertices.

    The result has ``n + ell*m`` vertices and ``(ell+1)*m`` edges; ell=0 is
    the identity.
    """
    if ell < 0:
        raise ValueError("subdivision count must be non-negative")
    if ell == 0:
        return g
    n_new = g.n + ell * g.num_edges
    edges: list[tuple[int, int]] = []
    next_id = g.n
    for u, v in g.edges:
        chain = [u] + list(range(next_id, next_id + ell)) + [v]
        next_id += ell
        edges.extend(zip(chain, chain[1:]))
    return Graph(n_new, edges)
