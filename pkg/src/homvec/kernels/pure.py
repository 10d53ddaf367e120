"""Pure-Python map-counting kernel.

Backtracking over a fixed search order of the pattern vertices; candidate
image sets are adjacency-bitmask intersections over the already-placed
neighbors.  Masks are Python ints, so there is no size or overflow limit.
The compiled kernel in _ckernel.pyx implements the same contract for graphs
that fit in 64-bit masks.
"""

MODE_HOM = 0
MODE_INJ = 1
MODE_SUR = 2
MODE_ISO = 3

BACKEND = "pure"


def count_maps(n_g, adj_g, order, n_h, adj_h, mode, find_one=False):
    """Count maps V(G) -> V(H) preserving edges, restricted by `mode`:

    HOM  every edge-preserving map
    INJ  injective edge-preserving maps
    SUR  edge-preserving maps whose image covers V(H) and E(H)
    ISO  bijections preserving edges and non-edges

    `adj_g`/`adj_h` are adjacency bitmask sequences; `order` is the search
    order of G's vertices (must cover all of them).  With `find_one`, stops
    at the first witness and returns 1.
    """
    if n_g == 0:
        if mode in (MODE_SUR, MODE_ISO):
            return 1 if n_h == 0 else 0
        return 1
    if n_h == 0:
        return 0
    if mode == MODE_ISO and n_g != n_h:
        return 0

    full = (1 << n_h) - 1
    k = n_g
    nbr_pos = []
    non_pos = []
    for i, v in enumerate(order):
        mask = adj_g[v]
        nbr_pos.append([j for j in range(i) if (mask >> order[j]) & 1])
        if mode == MODE_ISO:
            non_pos.append([j for j in range(i) if not (mask >> order[j]) & 1])

    if mode == MODE_SUR:
        edge_id = {}
        for a in range(n_h):
            rest = adj_h[a] >> (a + 1) << (a + 1)
            while rest:
                low = rest & -rest
                rest ^= low
                edge_id[(a, low.bit_length() - 1)] = len(edge_id)
        e_full = (1 << len(edge_id)) - 1
    if mode == MODE_ISO:
        comp_h = [full & ~adj_h[w] & ~(1 << w) for w in range(n_h)]

    img = [0] * k
    cand = [0] * k
    used = [0] * (k + 1)
    cov_v = [0] * (k + 1)
    cov_e = [0] * (k + 1)

    def candidates(i):
        c = full
        for j in nbr_pos[i]:
            c &= adj_h[img[j]]
        if mode in (MODE_INJ, MODE_ISO):
            c &= ~used[i]
        if mode == MODE_ISO:
            for j in non_pos[i]:
                c &= comp_h[img[j]]
        return c

    count = 0
    pos = 0
    cand[0] = candidates(0)
    while pos >= 0:
        c = cand[pos]
        if not c:
            pos -= 1
            continue
        low = c & -c
        cand[pos] = c ^ low
        w = low.bit_length() - 1
        img[pos] = w
        if mode == MODE_SUR:
            nv = cov_v[pos] | low
            ne = cov_e[pos]
            for j in nbr_pos[pos]:
                a, b = img[j], w
                ne |= 1 << edge_id[(a, b) if a < b else (b, a)]
            if n_h - bin(nv).count("1") > k - pos - 1:
                continue
        if pos == k - 1:
            if mode == MODE_SUR and not (nv == full and ne == e_full):
                continue
            count += 1
            if find_one:
                return count
            continue
        nxt = pos + 1
        used[nxt] = used[pos] | low
        if mode == MODE_SUR:
            cov_v[nxt] = nv
            cov_e[nxt] = ne
        pos = nxt
        cand[pos] = candidates(pos)
    return count


def iter_maps(n_g, adj_g, order, n_h, adj_h):
    """Yield every edge-preserving map as an image tuple indexed by G vertex.
    `adj_h` may carry loop bits (bit v of adj_h[v]), letting edges land on
    loops.  Used by the weighted counting path."""
    if n_g == 0:
        yield ()
        return
    if n_h == 0:
        return
    full = (1 << n_h) - 1
    nbr_pos = []
    for i, v in enumerate(order):
        mask = adj_g[v]
        nbr_pos.append([j for j in range(i) if (mask >> order[j]) & 1])

    img = [0] * n_g
    cand = [0] * n_g

    def candidates(i):
        c = full
        for j in nbr_pos[i]:
            c &= adj_h[img[j]]
        return c

    pos = 0
    cand[0] = candidates(0)
    while pos >= 0:
        c = cand[pos]
        if not c:
            pos -= 1
            continue
        low = c & -c
        cand[pos] = c ^ low
        img[pos] = low.bit_length() - 1
        if pos == n_g - 1:
            by_vertex = [0] * n_g
            for i, v in enumerate(order):
                by_vertex[v] = img[i]
            yield tuple(by_vertex)
            continue
        pos += 1
        cand[pos] = candidates(pos)
