"""Pure NumPy subset-scan kernels.

Each scan enumerates all ``2**n`` vertex subsets of a bitmask-encoded graph
with vectorized subset DP tables:

    nbr[S]  = union of neighbor masks over S
    e[S]    = edges spanned by S
    vol[S]  = degree sum over S

Ratios are screened in float64 and the winner is resolved with exact integer
cross-multiplication, so results are exact and bit-identical to the compiled
backend. All counts here are small (n <= 24), where distinct ratios differ
by far more than the float screening window.
"""

from __future__ import annotations

import numpy as np

MAX_SCAN_BITS = 24
_WINDOW = 1e-9


def _check(n: int) -> None:
    if n < 1:
        raise ValueError("scan needs at least one vertex")
    if n > MAX_SCAN_BITS:
        raise ValueError(f"subset scan limited to n <= {MAX_SCAN_BITS}, got {n}")


def _tables(adj: np.ndarray, n: int, deg: np.ndarray | None, want_nbr: bool,
            want_edges: bool, want_vol: bool):
    size = 1 << n
    masks = np.arange(size, dtype=np.uint32)
    pc = np.bitwise_count(masks).astype(np.uint8)
    nbr = np.zeros(size, dtype=np.uint32) if want_nbr else None
    e = np.zeros(size, dtype=np.uint16) if want_edges else None
    vol = np.zeros(size, dtype=np.uint32) if want_vol else None
    for b in range(n):
        lo = 1 << b
        prev = slice(0, lo)
        cur = slice(lo, 2 * lo)
        if want_nbr:
            nbr[cur] = nbr[prev] | adj[b]
        if want_edges:
            e[cur] = e[prev] + np.bitwise_count(masks[prev] & adj[b]).astype(np.uint16)
        if want_vol:
            vol[cur] = vol[prev] + deg[b]
    return masks, pc, nbr, e, vol


def _resolve_min(num, den, admissible, pc, prefer_small=True):
    """Index of the exact min of num/den over admissible subsets.

    Ties broken by (smaller subset size, smaller mask). ``den`` entries of 0
    must only occur with num 0 and are treated as ratio 0.
    """
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(den > 0, num / np.maximum(den, 1), 0.0)
    ratio = np.where(admissible, ratio, np.inf)
    best = ratio.min()
    if not np.isfinite(best):
        return None
    window = admissible & (ratio <= best + _WINDOW)
    idx = np.flatnonzero(window)
    # exact class: keep entries minimizing num*den' vs num'*den (0/0 -> 0/1)
    nums = num[idx].astype(np.int64)
    dens = np.where(den[idx] == 0, 1, den[idx]).astype(np.int64)
    bn, bd = None, None
    for a, b in zip(nums, dens):
        if bn is None or a * bd < bn * b:
            bn, bd = int(a), int(b)
    exact = idx[(nums * bd) == (bn * dens)]
    sizes = pc[exact]
    exact = exact[sizes == sizes.min()]
    return int(exact.min())


def _resolve_max(num, den, admissible, pc):
    """Index of the exact max of num/den over admissible subsets (ties: smaller size, smaller mask)."""
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(den > 0, num / np.maximum(den, 1), 0.0)
    ratio = np.where(admissible, ratio, -np.inf)
    best = ratio.max()
    if not np.isfinite(best):
        return None
    window = admissible & (ratio >= best - _WINDOW)
    idx = np.flatnonzero(window)
    nums = num[idx].astype(np.int64)
    dens = np.maximum(den[idx].astype(np.int64), 1)
    bn, bd = None, None
    for a, b in zip(nums, dens):
        if bn is None or a * bd > bn * b:
            bn, bd = int(a), int(b)
    exact = idx[(nums * bd) == (bn * dens)]
    sizes = pc[exact]
    exact = exact[sizes == sizes.min()]
    return int(exact.min())


def scan_vertex_expansion(adj: np.ndarray, n: int, allowed_sizes: np.ndarray):
    """Minimize |N(S)| / |S| over subsets whose size is allowed.

    ``allowed_sizes`` is a boolean array of length n+1; size-0 subsets are
    never admissible. Returns (|N(S)|, |S|, mask) or None if the admissible
    family is empty.
    """
    _check(n)
    masks, pc, nbr, _, _ = _tables(adj, n, None, True, False, False)
    ext = np.bitwise_count(nbr & ~masks)
    allowed = np.asarray(allowed_sizes, dtype=bool).copy()
    allowed[0] = False
    admissible = allowed[pc]
    i = _resolve_min(ext, pc, admissible, pc)
    if i is None:
        return None
    return int(ext[i]), int(pc[i]), int(masks[i])


def scan_cheeger(adj: np.ndarray, n: int, deg: np.ndarray):
    """Exact Cheeger cut and edge-isoperimetric cut.

    Returns ``(cross_h, minvol_h, mask_h, cross_i, size_i, mask_i)`` where
    the first triple minimizes crossing/min(vol, vol_complement) over proper
    non-empty subsets and the second minimizes crossing/|S| over non-empty
    subsets with |S| <= n//2. Requires at least one edge.
    """
    _check(n)
    deg = np.asarray(deg, dtype=np.uint32)
    total_vol = int(deg.sum())
    if total_vol == 0:
        raise ValueError("Cheeger quantities undefined on an edgeless graph")
    masks, pc, _, e, vol = _tables(adj, n, deg, False, True, True)
    cross = vol - 2 * e.astype(np.uint32)
    minvol = np.minimum(vol, total_vol - vol)
    # splits with a zero-volume side define no bottleneck ratio: excluded
    proper = (pc >= 1) & (pc < n) & (minvol > 0)
    ih = _resolve_min(cross, minvol, proper, pc)
    small = (pc >= 1) & (pc <= n // 2)
    ii = _resolve_min(cross, pc, small, pc)
    return (
        int(cross[ih]), int(minvol[ih]), int(masks[ih]),
        int(cross[ii]), int(pc[ii]), int(masks[ii]),
    )


def scan_max_density(adj: np.ndarray, n: int, lo: int, hi: int):
    """Maximize internal_edges / |S| over subsets with lo <= |S| <= hi.

    Returns (edges, |S|, mask) or None when no size in range exists.
    """
    _check(n)
    lo = max(lo, 1)
    if hi < lo:
        return None
    masks, pc, _, e, _ = _tables(adj, n, None, False, True, False)
    admissible = (pc >= lo) & (pc <= hi)
    if not admissible.any():
        return None
    i = _resolve_max(e.astype(np.uint32), pc, admissible, pc)
    return int(e[i]), int(pc[i]), int(masks[i])
