"""Numba backend for the chamber-orbit kernels (default when importable)."""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def chamber_orbit(cartan, start, bound, limit):
    r = start.shape[0]
    base = 2 * bound + 1
    place = np.empty(r, dtype=np.int64)
    acc = 1
    for j in range(r):
        place[j] = acc
        acc *= base
    vectors = np.empty((limit, r), dtype=np.int64)
    levels = np.empty(limit, dtype=np.int64)
    vectors[0] = start
    levels[0] = 0
    seen = {np.int64(0): np.uint8(1)}
    key0 = np.int64(0)
    for j in range(r):
        key0 += (start[j] + bound) * place[j]
    seen.clear()
    seen[key0] = np.uint8(1)
    total = 1
    level = 0
    lo, hi = 0, 1
    while hi > lo:
        new_keys = []
        for idx in range(lo, hi):
            for i in range(r):
                c = vectors[idx, i]
                if c == 0:
                    continue
                key = np.int64(0)
                ok = True
                for j in range(r):
                    nv = vectors[idx, j] - c * cartan[j, i]
                    if nv > bound or nv < -bound:
                        ok = False
                        break
                    key += (nv + bound) * place[j]
                if not ok:
                    raise ValueError("chamber_orbit: coordinate bound exceeded")
                if key not in seen:
                    seen[key] = np.uint8(1)
                    new_keys.append(key)
        if len(new_keys) == 0:
            break
        if total + len(new_keys) > limit:
            raise ValueError("chamber_orbit: enumeration cap exceeded")
        keys_arr = np.empty(len(new_keys), dtype=np.int64)
        for k in range(len(new_keys)):
            keys_arr[k] = new_keys[k]
        keys_arr.sort()
        level += 1
        for k in range(keys_arr.shape[0]):
            key = keys_arr[k]
            for j in range(r):
                vectors[total, j] = (key // place[j]) % base - bound
            levels[total] = level
            total += 1
        lo, hi = hi, total
    return vectors[:total].copy(), levels[:total].copy()


@njit(cache=True)
def canonical_words(cartan, vectors):
    n, r = vectors.shape
    lengths = np.empty(n, dtype=np.int64)
    total = 0
    v = np.empty(r, dtype=np.int64)
    for k in range(n):
        for j in range(r):
            v[j] = vectors[k, j]
        m = 0
        while True:
            i = -1
            for j in range(r):
                if v[j] < 0:
                    i = j
                    break
            if i < 0:
                break
            c = v[i]
            for j in range(r):
                v[j] -= c * cartan[j, i]
            m += 1
        lengths[k] = m
        total += m
    offsets = np.zeros(n + 1, dtype=np.int64)
    for k in range(n):
        offsets[k + 1] = offsets[k] + lengths[k]
    words = np.empty(total, dtype=np.int64)
    for k in range(n):
        for j in range(r):
            v[j] = vectors[k, j]
        pos = offsets[k]
        while True:
            i = -1
            for j in range(r):
                if v[j] < 0:
                    i = j
                    break
            if i < 0:
                break
            words[pos] = i
            pos += 1
            c = v[i]
            for j in range(r):
                v[j] -= c * cartan[j, i]
    return words, offsets
