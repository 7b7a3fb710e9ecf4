"""Loop kernels compiled with numba.

Every function here has a twin in ``_numpy`` that must return identical
arrays; the hashing constants are shared so both backends agree bit for bit.
"""
from __future__ import annotations

import numpy as np

from .._accel import njit

M1 = np.uint64(0x9E3779B97F4A7C15)
M2 = np.uint64(0xBF58476D1CE4E5B9)
M3 = np.uint64(0x94D049BB133111EB)
SALT_COORD = np.uint64(0x243F6A8885A308D3)
SALT_WORD = np.uint64(0x13198A2E03707344)
SALT_INV = np.uint64(0xA4093822299F31D0)
S30 = np.uint64(30)
S27 = np.uint64(27)
S31 = np.uint64(31)
ONE = np.uint64(1)
ZERO = np.uint64(0)


@njit
def _mix(x):
    z = x + M1
    z = (z ^ (z >> S30)) * M2
    z = (z ^ (z >> S27)) * M3
    return z ^ (z >> S31)


@njit
def span(gens):
    r = gens.shape[0]
    out = np.zeros(1 << r, dtype=np.uint64)
    for j in range(r):
        g = gens[r - 1 - j]
        size = 1 << j
        for i in range(size):
            out[size + i] = out[i] ^ g
    return out


@njit
def _popcount1(x):
    x = x - ((x >> ONE) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit
def popcount(a):
    out = np.empty(a.shape[0], dtype=np.int64)
    for i in range(a.shape[0]):
        out[i] = np.int64(_popcount1(a[i]))
    return out


@njit
def _dense_rank(cell, sig):
    size = cell.shape[0]
    rank = np.empty(size, dtype=np.int64)
    if size == 0:
        return rank, 0
    o1 = np.argsort(sig, kind="mergesort")
    o = o1[np.argsort(cell[o1], kind="mergesort")]
    r = 0
    rank[o[0]] = 0
    for t in range(1, size):
        a = o[t - 1]
        b = o[t]
        if cell[a] != cell[b] or sig[a] != sig[b]:
            r += 1
        rank[b] = r
    return rank, r + 1


@njit
def refine(inc, coord_cell, word_cell):
    m = inc.shape[0]
    n = inc.shape[1]
    cc = coord_cell.copy()
    wc = word_cell.copy()
    nc = cc.max() + 1 if n > 0 else 0
    nw = wc.max() + 1 if m > 0 else 0
    wsig = np.zeros(m, dtype=np.uint64)
    csig = np.zeros(n, dtype=np.uint64)
    while True:
        hc = np.empty(n, dtype=np.uint64)
        for i in range(n):
            hc[i] = _mix(np.uint64(cc[i]) + SALT_COORD)
        for w in range(m):
            s = ZERO
            for i in range(n):
                if inc[w, i]:
                    s += hc[i]
            wsig[w] = s
        wc2, nw2 = _dense_rank(wc, wsig)
        hw = np.empty(m, dtype=np.uint64)
        for w in range(m):
            hw[w] = _mix(np.uint64(wc2[w]) + SALT_WORD)
        for i in range(n):
            csig[i] = ZERO
        for w in range(m):
            h = hw[w]
            for i in range(n):
                if inc[w, i]:
                    csig[i] += h
        cc2, nc2 = _dense_rank(cc, csig)
        stable = nc2 == nc and nw2 == nw
        cc = cc2
        wc = wc2
        nc = nc2
        nw = nw2
        if stable:
            break
    inv = ZERO
    for i in range(n):
        inv += _mix(_mix(np.uint64(cc[i]) + SALT_INV) ^ csig[i])
    for w in range(m):
        inv += _mix(_mix(np.uint64(wc[w]) + SALT_WORD) ^ wsig[w])
    return cc, wc, inv


@njit
def certificate(inc, pos):
    m = inc.shape[0]
    n = inc.shape[1]
    out = np.zeros(m, dtype=np.uint64)
    for w in range(m):
        v = ZERO
        for i in range(n):
            if inc[w, i]:
                v |= ONE << np.uint64(n - 1 - pos[i])
        out[w] = v
    out = np.sort(out)
    return out[::-1].copy()


@njit
def permute_words(words, pos, n):
    out = np.zeros(words.shape[0], dtype=np.uint64)
    for t in range(words.shape[0]):
        w = words[t]
        v = ZERO
        for i in range(n):
            if (w >> np.uint64(n - 1 - i)) & ONE:
                v |= ONE << np.uint64(n - 1 - pos[i])
        out[t] = v
    return out


@njit
def _find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit
def orbit_labels(images):
    g = images.shape[0]
    size = images.shape[1]
    parent = np.arange(size)
    for j in range(g):
        for x in range(size):
            a = _find(parent, x)
            b = _find(parent, images[j, x])
            if a < b:
                parent[b] = a
            elif b < a:
                parent[a] = b
    out = np.empty(size, dtype=np.int64)
    for x in range(size):
        out[x] = _find(parent, x)
    return out
