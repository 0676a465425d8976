"""Pure-numpy backend for the chamber-orbit kernels.

Same contract as ``_numba_impl``; used when numba is unavailable or when
``FLAGDOM_BACKEND=numpy`` forces the fallback.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def _pack(vectors: np.ndarray, place: np.ndarray, bound: int) -> np.ndarray:
    return (vectors + bound) @ place


def _unpack(keys: np.ndarray, place: np.ndarray, base: int, bound: int) -> np.ndarray:
    return (keys[:, None] // place[None, :]) % base - bound


def chamber_orbit(cartan: np.ndarray, start: np.ndarray, bound: int, limit: int):
    """Orbit of a dominant integer vector under all simple reflections.

    Returns ``(vectors, levels)`` where row 0 is ``start``, rows are grouped
    by BFS level (= minimal word length reaching the vector) and sorted by
    packed key within each level.  Raises ``ValueError`` if the orbit exceeds
    ``limit`` elements or a coordinate leaves ``[-bound, bound]``.
    """
    r = start.shape[0]
    base = 2 * bound + 1
    place = (base ** np.arange(r)).astype(np.int64)
    # columns of the Cartan matrix = simple roots in fundamental coordinates
    cols = cartan.T.astype(np.int64)

    frontier = start[None, :].astype(np.int64)
    chunks = [frontier]
    level_sizes = [1]
    seen = _pack(frontier, place, bound)
    total = 1
    while frontier.shape[0]:
        # images[f, i, :] = s_i applied to frontier[f]
        images = frontier[:, None, :] - frontier[:, :, None] * cols[None, :, :]
        flat = images.reshape(-1, r)
        if flat.size and (np.abs(flat).max() > bound):
            raise ValueError("chamber_orbit: coordinate bound exceeded")
        keys = np.unique(_pack(flat, place, bound))
        keys = keys[~np.isin(keys, seen, assume_unique=True)]
        if keys.size == 0:
            break
        total += keys.size
        if total > limit:
            raise ValueError("chamber_orbit: enumeration cap exceeded")
        frontier = _unpack(keys, place, base, bound)
        chunks.append(frontier)
        level_sizes.append(keys.size)
        seen = np.sort(np.concatenate([seen, keys]))
    vectors = np.concatenate(chunks, axis=0)
    levels = np.repeat(np.arange(len(level_sizes), dtype=np.int64), level_sizes)
    return vectors, levels


def canonical_words(cartan: np.ndarray, vectors: np.ndarray):
    """Lexicographically-smallest reduced words for chamber-orbit vectors.

    Walks each vector back to the dominant chamber, always reflecting at the
    smallest index with a negative coordinate.  Returns 0-based letters as a
    flat array plus offsets (``words[offsets[k]:offsets[k+1]]`` is word k).
    """
    n, r = vectors.shape
    cols = cartan.T.astype(np.int64)
    v = vectors.astype(np.int64).copy()
    steps = []
    while True:
        neg = v < 0
        rows = np.nonzero(neg.any(axis=1))[0]
        if rows.size == 0:
            break
        letters = np.argmax(neg[rows], axis=1)
        step = np.full(n, -1, dtype=np.int64)
        step[rows] = letters
        steps.append(step)
        v[rows] -= v[rows, letters][:, None] * cols[letters]
    if steps:
        mat = np.stack(steps, axis=1)  # (n, max_len), -1 marks "done"
        mask = mat >= 0
        words = mat[mask]
        lengths = mask.sum(axis=1)
    else:
        words = np.empty(0, dtype=np.int64)
        lengths = np.zeros(n, dtype=np.int64)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(lengths, out=offsets[1:])
    return words, offsets
