# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled subset-scan kernels.

Same contract as :mod:`expanders.kernels.pure`: exhaustive enumeration of all
2**n vertex subsets with incremental DP tables, exact integer ratio
comparisons, ties broken by (smaller size, smaller mask). Results are
bit-identical to the pure backend.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

DEF MAX_SCAN_BITS = 24


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


def _check(int n):
    if n < 1:
        raise ValueError("scan needs at least one vertex")
    if n > MAX_SCAN_BITS:
        raise ValueError(f"subset scan limited to n <= {MAX_SCAN_BITS}, got {n}")


def scan_vertex_expansion(adj, int n, allowed_sizes):
    """Minimize |N(S)|/|S| over subsets with an allowed size; see pure backend."""
    _check(n)
    cdef cnp.uint32_t[::1] adj_v = np.ascontiguousarray(adj, dtype=np.uint32)
    allowed = np.asarray(allowed_sizes, dtype=np.uint8).copy()
    allowed[0] = 0
    cdef cnp.uint8_t[::1] allow_v = np.ascontiguousarray(allowed)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    nbr_arr = np.zeros(size, dtype=np.uint32)
    cdef cnp.uint32_t[::1] nbr = nbr_arr
    cdef Py_ssize_t s
    cdef unsigned long long low, prev
    cdef int pc, ext, v
    cdef long long best_num = -1, best_den = 1
    cdef Py_ssize_t best_mask = -1
    cdef int best_size = 0
    cdef unsigned long long full
    with nogil:
        for s in range(1, size):
            low = (<unsigned long long>s) & (-<unsigned long long>s)
            prev = (<unsigned long long>s) ^ low
            v = _popcount(low - 1)
            nbr[s] = nbr[prev] | adj_v[v]
            pc = _popcount(<unsigned long long>s)
            if not allow_v[pc]:
                continue
            ext = _popcount(nbr[s] & ~(<unsigned long long>s))
            if best_num < 0:
                best_num = ext; best_den = pc
                best_mask = s; best_size = pc
                continue
            # ext/pc vs best: cross-multiply
            if (<long long>ext) * best_den < best_num * pc:
                best_num = ext; best_den = pc
                best_mask = s; best_size = pc
            elif (<long long>ext) * best_den == best_num * pc:
                if pc < best_size or (pc == best_size and s < best_mask):
                    best_num = ext; best_den = pc
                    best_mask = s; best_size = pc
    if best_mask < 0:
        return None
    return int(best_num), int(best_size), int(best_mask)


def scan_cheeger(adj, int n, deg):
    """Exact Cheeger cut and edge-isoperimetric cut; see pure backend."""
    _check(n)
    cdef cnp.uint32_t[::1] adj_v = np.ascontiguousarray(adj, dtype=np.uint32)
    cdef cnp.uint32_t[::1] deg_v = np.ascontiguousarray(deg, dtype=np.uint32)
    cdef long long total_vol = 0
    cdef int i
    for i in range(n):
        total_vol += deg_v[i]
    if total_vol == 0:
        raise ValueError("Cheeger quantities undefined on an edgeless graph")
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    e_arr = np.zeros(size, dtype=np.uint16)
    vol_arr = np.zeros(size, dtype=np.uint32)
    cdef cnp.uint16_t[::1] e = e_arr
    cdef cnp.uint32_t[::1] vol = vol_arr
    cdef Py_ssize_t s
    cdef unsigned long long low, prev
    cdef int pc, v
    cdef long long cross, minvol, sz
    cdef long long h_num = -1, h_den = 1
    cdef Py_ssize_t h_mask = -1
    cdef int h_size = 0
    cdef long long i_num = -1, i_den = 1
    cdef Py_ssize_t i_mask = -1
    cdef int i_size = 0
    cdef int half = n // 2
    with nogil:
        for s in range(1, size):
            low = (<unsigned long long>s) & (-<unsigned long long>s)
            prev = (<unsigned long long>s) ^ low
            v = _popcount(low - 1)
            e[s] = e[prev] + _popcount((<unsigned long long>prev) & adj_v[v])
            vol[s] = vol[prev] + deg_v[v]
            if s == size - 1:
                continue
            pc = _popcount(<unsigned long long>s)
            cross = vol[s] - 2 * <long long>e[s]
            minvol = vol[s]
            if total_vol - vol[s] < minvol:
                minvol = total_vol - vol[s]
            # h-cut: splits with a zero-volume side define no ratio
            if minvol > 0:
                sz = minvol
                if h_num < 0 or cross * h_den < h_num * sz or (
                    cross * h_den == h_num * sz and (
                        pc < h_size or (pc == h_size and s < h_mask))):
                    h_num = cross; h_den = sz
                    h_mask = s; h_size = pc
            if pc <= half:
                if i_num < 0 or cross * i_den < i_num * pc or (
                    cross * i_den == i_num * pc and (
                        pc < i_size or (pc == i_size and s < i_mask))):
                    i_num = cross; i_den = pc
                    i_mask = s; i_size = pc
    h_minvol = min(int(vol_arr[h_mask]), int(total_vol - vol_arr[h_mask]))
    h_cross = int(vol_arr[h_mask]) - 2 * int(e_arr[h_mask])
    i_cross = int(vol_arr[i_mask]) - 2 * int(e_arr[i_mask])
    return h_cross, h_minvol, int(h_mask), i_cross, i_size, int(i_mask)


def scan_max_density(adj, int n, int lo, int hi):
    """Maximize internal_edges/|S| over subsets with lo <= |S| <= hi; see pure backend."""
    _check(n)
    if lo < 1:
        lo = 1
    if hi < lo:
        return None
    cdef cnp.uint32_t[::1] adj_v = np.ascontiguousarray(adj, dtype=np.uint32)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    e_arr = np.zeros(size, dtype=np.uint16)
    cdef cnp.uint16_t[::1] e = e_arr
    cdef Py_ssize_t s
    cdef unsigned long long low, prev
    cdef int pc, v
    cdef long long best_num = -1, best_den = 1
    cdef Py_ssize_t best_mask = -1
    cdef int best_size = 0
    with nogil:
        for s in range(1, size):
            low = (<unsigned long long>s) & (-<unsigned long long>s)
            prev = (<unsigned long long>s) ^ low
            v = _popcount(low - 1)
            e[s] = e[prev] + _popcount((<unsigned long long>prev) & adj_v[v])
            pc = _popcount(<unsigned long long>s)
            if pc < lo or pc > hi:
                continue
            if best_num < 0 or (<long long>e[s]) * best_den > best_num * pc or (
                (<long long>e[s]) * best_den == best_num * pc and (
                    pc < best_size or (pc == best_size and s < best_mask))):
                best_num = e[s]; best_den = pc
                best_mask = s; best_size = pc
    if best_mask < 0:
        return None
    return int(best_num), int(best_size), int(best_mask)
