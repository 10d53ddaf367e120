# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled map-counting kernel: same contract as kernels.pure.count_maps,
restricted to graphs whose vertex sets fit in 64-bit masks and whose counts
fit in int64 (the dispatcher checks both before calling in)."""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)

DEF MAXN = 64

MODE_HOM = 0
MODE_INJ = 1
MODE_SUR = 2
MODE_ISO = 3

BACKEND = "c"


def count_maps(int n_g, adj_g, order, int n_h, adj_h, int mode, bint find_one=False):
    cdef uint64_t g_adj[MAXN]
    cdef uint64_t h_adj[MAXN]
    cdef uint64_t comp_h[MAXN]
    cdef int ord_c[MAXN]
    cdef int nbr_off[MAXN + 1]
    cdef int nbr_flat[MAXN * MAXN]
    cdef int non_off[MAXN + 1]
    cdef int non_flat[MAXN * MAXN]
    cdef int edge_id[MAXN][MAXN]
    cdef uint64_t cand[MAXN]
    cdef uint64_t used[MAXN + 1]
    cdef uint64_t cov_v[MAXN + 1]
    cdef uint64_t cov_e[MAXN + 1]
    cdef int img[MAXN]
    cdef int i, j, v, w, a, b, pos, nxt, n_edges
    cdef uint64_t full, c, low, nv, ne, e_full, mask, rest
    cdef int64_t count = 0

    if n_g > MAXN or n_h > MAXN:
        raise ValueError("compiled kernel limited to 64 vertices")

    if n_g == 0:
        if mode == MODE_SUR or mode == MODE_ISO:
            return 1 if n_h == 0 else 0
        return 1
    if n_h == 0:
        return 0
    if mode == MODE_ISO and n_g != n_h:
        return 0

    for v in range(n_g):
        g_adj[v] = adj_g[v]
    for v in range(n_h):
        h_adj[v] = adj_h[v]
    for i in range(n_g):
        ord_c[i] = order[i]

    full = (<uint64_t>1 << n_h) - 1 if n_h < 64 else <uint64_t>0 - 1

    # earlier-position neighbor / non-neighbor lists along the search order
    nbr_off[0] = 0
    non_off[0] = 0
    for i in range(n_g):
        v = ord_c[i]
        mask = g_adj[v]
        nbr_off[i + 1] = nbr_off[i]
        non_off[i + 1] = non_off[i]
        for j in range(i):
            if (mask >> ord_c[j]) & 1:
                nbr_flat[nbr_off[i + 1]] = j
                nbr_off[i + 1] += 1
            else:
                non_flat[non_off[i + 1]] = j
                non_off[i + 1] += 1

    e_full = 0
    if mode == MODE_SUR:
        n_edges = 0
        for a in range(n_h):
            rest = h_adj[a] >> (a + 1) << (a + 1)
            while rest:
                b = __builtin_ctzll(rest)
                rest &= rest - 1
                if n_edges >= 64:
                    raise ValueError("compiled kernel limited to 64 target edges")
                edge_id[a][b] = n_edges
                edge_id[b][a] = n_edges
                n_edges += 1
        e_full = (<uint64_t>1 << n_edges) - 1 if n_edges < 64 else <uint64_t>0 - 1
    if mode == MODE_ISO:
        for w in range(n_h):
            comp_h[w] = full & ~h_adj[w] & ~(<uint64_t>1 << w)

    used[0] = 0
    cov_v[0] = 0
    cov_e[0] = 0
    nv = 0
    ne = 0

    pos = 0
    c = full
    for j in range(nbr_off[0], nbr_off[1]):
        c &= h_adj[img[nbr_flat[j]]]
    cand[0] = c

    while pos >= 0:
        c = cand[pos]
        if c == 0:
            pos -= 1
            continue
        low = c & (~c + 1)
        cand[pos] = c ^ low
        w = __builtin_ctzll(low)
        img[pos] = w
        if mode == MODE_SUR:
            nv = cov_v[pos] | low
            ne = cov_e[pos]
            for j in range(nbr_off[pos], nbr_off[pos + 1]):
                ne |= <uint64_t>1 << edge_id[img[nbr_flat[j]]][w]
            if n_h - __builtin_popcountll(nv) > n_g - pos - 1:
                continue
        if pos == n_g - 1:
            if mode == MODE_SUR and not (nv == full and ne == e_full):
                continue
            count += 1
            if find_one:
                return 1
            continue
        nxt = pos + 1
        used[nxt] = used[pos] | low
        if mode == MODE_SUR:
            cov_v[nxt] = nv
            cov_e[nxt] = ne
        pos = nxt
        c = full
        for j in range(nbr_off[pos], nbr_off[pos + 1]):
            c &= h_adj[img[nbr_flat[j]]]
        if mode == MODE_INJ or mode == MODE_ISO:
            c &= ~used[pos]
        if mode == MODE_ISO:
            for j in range(non_off[pos], non_off[pos + 1]):
                c &= comp_h[img[non_flat[j]]]
        cand[pos] = c
    return count
