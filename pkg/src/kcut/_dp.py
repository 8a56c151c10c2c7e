"""Bitmask subset DP for exact minimum k-way cuts of one connected component.

For a vertex set V with top vertex t, levels ``g[j][S]`` (S a subset of
``V - {t}``) hold the largest total internal weight over partitions of S into
exactly j nonempty parts. The part holding t is chosen last, so a level costs
about ``3**(n-1) / 2`` steps instead of ``3**n``. The minimum k-way cut is
then ``w(V) - best[k]``.
"""

import numpy as np
from numba import njit

NEG = np.int64(-(1 << 62))


@njit(cache=True)
def _bit_index(low):
    i = 0
    while low > 1:
        low >>= 1
        i += 1
    return i


@njit(cache=True)
def _internal_weights(adj):
    n = adj.shape[0]
    m = n - 1
    size = 1 << m
    w_in = np.zeros(size, np.int64)
    w_top = np.zeros(size, np.int64)
    popcount = np.zeros(size, np.int64)
    for t in range(1, size):
        low = t & -t
        v = _bit_index(low)
        rest = t ^ low
        s = 0
        r = rest
        while r:
            lb = r & -r
            s += adj[v, _bit_index(lb)]
            r ^= lb
        w_in[t] = w_in[rest] + s
        w_top[t] = w_top[rest] + adj[m, v]
        popcount[t] = popcount[rest] + 1
    return w_in, w_top, popcount


@njit(cache=True)
def solve_levels(adj, kmax):
    """Return ``(best, g, w_in, w_top)``; ``best[j]`` is NEG when infeasible."""
    n = adj.shape[0]
    m = n - 1
    size = 1 << m
    full = size - 1
    w_in, w_top, popcount = _internal_weights(adj)
    levels = max(kmax - 1, 1)
    g = np.full((levels + 1, size), NEG, np.int64)
    g[0, 0] = 0
    for s in range(1, size):
        g[1, s] = w_in[s]
    for j in range(2, kmax):
        for s in range(1, size):
            if popcount[s] < j:
                continue
            low = s & -s
            r = s ^ low
            best = NEG
            sub = r
            while True:
                t = sub | low
                if t != s:
                    prev = g[j - 1, s ^ t]
                    if prev != NEG:
                        val = w_in[t] + prev
                        if val > best:
                            best = val
                if sub == 0:
                    break
                sub = (sub - 1) & r
            g[j, s] = best
    best = np.full(kmax + 1, NEG, np.int64)
    for j in range(1, min(kmax, n) + 1):
        b = NEG
        sub = full
        while True:
            prev = g[j - 1, full ^ sub]
            if prev != NEG:
                val = w_in[sub] + w_top[sub] + prev
                if val > b:
                    b = val
            if sub == 0:
                break
            sub = (sub - 1) & full
        best[j] = b
    return best, g, w_in, w_top


@njit(cache=True)
def reconstruct(g, w_in, w_top, j, value):
    """Part label per vertex for an optimal j-part partition (first found)."""
    size = w_in.shape[0]
    m = _bit_index(size)
    full = size - 1
    labels = np.full(m + 1, -1, np.int64)
    sub = full
    while True:
        prev = g[j - 1, full ^ sub]
        if prev != NEG and w_in[sub] + w_top[sub] + prev == value:
            break
        if sub == 0:
            return labels
        sub = (sub - 1) & full
    labels[m] = 0
    r = sub
    while r:
        lb = r & -r
        labels[_bit_index(lb)] = 0
        r ^= lb
    s = full ^ sub
    part = 1
    for lev in range(j - 1, 0, -1):
        target = g[lev, s]
        low = s & -s
        r = s ^ low
        sub = r
        while True:
            t = sub | low
            prev = g[lev - 1, s ^ t]
            if prev != NEG and w_in[t] + prev == target:
                break
            sub = (sub - 1) & r
        rr = t
        while rr:
            lb = rr & -rr
            labels[_bit_index(lb)] = part
            rr ^= lb
        s ^= t
        part += 1
    return labels
