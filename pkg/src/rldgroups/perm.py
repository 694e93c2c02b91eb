"""Permutations of ``range(N)`` stored as numpy image arrays.

``perm[i]`` is the image of point ``i``.  Products are read left to right:
``compose(a, b)`` applies ``a`` first and then ``b``, which matches the way
input words act on automaton states.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .errors import DomainMismatch


def as_perm(images) -> np.ndarray:
    arr = np.asarray(images, dtype=np.int64)
    if arr.ndim != 1 or not np.array_equal(np.sort(arr), np.arange(arr.size)):
        raise ValueError("not a permutation")
    return arr


def identity_perm(size: int) -> np.ndarray:
    return np.arange(size, dtype=np.int64)


def is_identity(a: np.ndarray) -> bool:
    return bool(np.array_equal(a, np.arange(a.size)))


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Apply ``a`` then ``b``."""
    if a.size != b.size:
        raise DomainMismatch(f"degrees differ: {a.size} vs {b.size}")
    return b[a]


def invert(a: np.ndarray) -> np.ndarray:
    inv = np.empty_like(a)
    inv[a] = np.arange(a.size, dtype=a.dtype)
    return inv


def power(a: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        a, k = invert(a), -k
    result = np.arange(a.size, dtype=a.dtype)
    base = a
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return result


def compose_word(perms, word, size: int) -> np.ndarray:
    """Product of ``perms[w]`` over ``w`` in ``word``, in reading order."""
    result = np.arange(size, dtype=np.int64)
    for w in word:
        result = perms[w][result]
    return result


def cycles(a: np.ndarray) -> list[list[int]]:
    """Cycle decomposition, each cycle starting at its least point, fixed points included."""
    seen = np.zeros(a.size, dtype=bool)
    out = []
    for start in range(a.size):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = int(a[start])
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = int(a[j])
        out.append(cyc)
    return out


def cycle_type(a: np.ndarray) -> dict[int, int]:
    """Map cycle length -> number of cycles (visited-bitmap walk)."""
    seen = np.zeros(a.size, dtype=bool)
    counts: Counter = Counter()
    img = a.tolist()
    for start in range(a.size):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = img[j]
            length += 1
        counts[length] += 1
    return dict(sorted(counts.items()))


def format_cycle_type(ct: dict[int, int]) -> str:
    return " ".join(f"{length}^{mult}" for length, mult in sorted(ct.items(), reverse=True))
