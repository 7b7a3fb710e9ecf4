"""Vectorised numpy twins of the loop kernels in ``_numba``."""
from __future__ import annotations

import numpy as np

M1 = np.uint64(0x9E3779B97F4A7C15)
M2 = np.uint64(0xBF58476D1CE4E5B9)
M3 = np.uint64(0x94D049BB133111EB)
SALT_COORD = np.uint64(0x243F6A8885A308D3)
SALT_WORD = np.uint64(0x13198A2E03707344)
SALT_INV = np.uint64(0xA4093822299F31D0)


def _mix(x: np.ndarray) -> np.ndarray:
    z = x + M1
    z = (z ^ (z >> np.uint64(30))) * M2
    z = (z ^ (z >> np.uint64(27))) * M3
    return z ^ (z >> np.uint64(31))


def span(gens: np.ndarray) -> np.ndarray:
    out = np.zeros(1, dtype=np.uint64)
    for g in gens[::-1]:
        out = np.concatenate((out, out ^ g))
    return out


def popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a).astype(np.int64)


def _dense_rank(cell: np.ndarray, sig: np.ndarray) -> tuple[np.ndarray, int]:
    size = cell.shape[0]
    rank = np.empty(size, dtype=np.int64)
    if size == 0:
        return rank, 0
    o = np.lexsort((sig, cell))
    cs, ss = cell[o], sig[o]
    change = np.empty(size, dtype=np.int64)
    change[0] = 0
    change[1:] = (cs[1:] != cs[:-1]) | (ss[1:] != ss[:-1])
    r = np.cumsum(change)
    rank[o] = r
    return rank, int(r[-1]) + 1


def refine(inc: np.ndarray, coord_cell: np.ndarray, word_cell: np.ndarray):
    m, n = inc.shape
    x = inc.astype(np.uint64)
    cc = coord_cell.copy()
    wc = word_cell.copy()
    nc = int(cc.max()) + 1 if n else 0
    nw = int(wc.max()) + 1 if m else 0
    while True:
        hc = _mix(cc.astype(np.uint64) + SALT_COORD)
        wsig = (x * hc).sum(axis=1, dtype=np.uint64) if m else np.zeros(0, np.uint64)
        wc2, nw2 = _dense_rank(wc, wsig)
        hw = _mix(wc2.astype(np.uint64) + SALT_WORD)
        csig = (x * hw[:, None]).sum(axis=0, dtype=np.uint64) if m else np.zeros(n, np.uint64)
        cc2, nc2 = _dense_rank(cc, csig)
        stable = nc2 == nc and nw2 == nw
        cc, wc, nc, nw = cc2, wc2, nc2, nw2
        if stable:
            break
    terms = np.concatenate((
        _mix(_mix(cc.astype(np.uint64) + SALT_INV) ^ csig),
        _mix(_mix(wc.astype(np.uint64) + SALT_WORD) ^ wsig),
    ))
    return cc, wc, terms.sum(dtype=np.uint64)


def certificate(inc: np.ndarray, pos: np.ndarray) -> np.ndarray:
    n = inc.shape[1]
    weights = np.uint64(1) << (n - 1 - pos).astype(np.uint64)
    vals = (inc.astype(np.uint64) * weights).sum(axis=1, dtype=np.uint64)
    return np.sort(vals)[::-1].copy()


def permute_words(words: np.ndarray, pos: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(words.shape[0], dtype=np.uint64)
    for i in range(n):
        bit = (words >> np.uint64(n - 1 - i)) & np.uint64(1)
        out |= bit << np.uint64(n - 1 - int(pos[i]))
    return out


def orbit_labels(images: np.ndarray) -> np.ndarray:
    size = images.shape[1]
    lab = np.arange(size, dtype=np.int64)
    while True:
        old = lab.copy()
        for img in images:
            np.minimum.at(lab, img, lab.copy())
            lab = np.minimum(lab, lab[img])
        lab = lab[lab]
        if np.array_equal(lab, old):
            return lab
