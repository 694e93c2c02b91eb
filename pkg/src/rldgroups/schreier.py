"""Deterministic Schreier-Sims for permutation groups given by generators.

The base is chosen in natural point order (each new base point is the
smallest point moved by the generator that forced it).  Group orders are
reported as base-2 exponents; every group met in this package is a 2-group,
so orbit sizes along the chain are powers of two and the exponent is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainMismatch


BATCH = 256  # Schreier generators sifted together


def _index_dtype(degree):
    return np.int16 if degree <= (1 << 15) else np.int32


@dataclass(eq=False)
class Level:
    """One link of the stabilizer chain."""

    point: int
    gens: list = field(default_factory=list)       # indices into Bsgs.strong_gens
    orbit: list = field(default_factory=list)      # points in discovery order
    schreier: np.ndarray = None                    # generator index per point, -1 outside, -2 at base
    reps: dict = field(default_factory=dict)       # point -> coset representative u (b -> point)
    inv_reps: dict = field(default_factory=dict)   # point -> u^-1
    tree_edges: set = field(default_factory=set)   # (point, gen) pairs that define a representative
    checked: list = field(default_factory=list)    # per local gen: orbit prefix already checked
    bfs_done: int = 0
    index: np.ndarray = None                       # point -> position in orbit, -1 outside
    inv_mat: np.ndarray = None                     # inverse representatives stacked in orbit order

    def inverse_matrix(self):
        if self.inv_mat is None or self.inv_mat.shape[0] != len(self.orbit):
            self.inv_mat = np.stack([self.inv_reps[p] for p in self.orbit])
        return self.inv_mat


@dataclass(eq=False)
class Bsgs:
    degree: int
    base: list
    strong_gens: list
    levels: list

    @property
    def orbit_sizes(self) -> list:
        return [len(lv.orbit) for lv in self.levels]

    def to_dict(self) -> dict:
        """Plain serializable form; identical inputs give identical output."""
        return {
            "degree": self.degree,
            "base": list(self.base),
            "orbit_sizes": self.orbit_sizes,
            "strong_gens": [g.tolist() for g in self.strong_gens],
            "schreier_vectors": [lv.schreier.tolist() for lv in self.levels],
        }


@dataclass(frozen=True)
class OrderExponent:
    """``order = 2^exp`` when ``exact``; otherwise ``exp = ceil(log2(order))``."""

    exp: int
    exact: bool
    orbit_sizes: tuple = ()

    @property
    def order(self) -> int:
        return math.prod(self.orbit_sizes)


def _identity(degree, dtype):
    return np.arange(degree, dtype=dtype)


def _add_rep(level, point, rep):
    level.index[point] = len(level.reps)
    level.reps[point] = rep
    inv = np.empty_like(rep)
    inv[rep] = np.arange(rep.size, dtype=rep.dtype)
    level.inv_reps[point] = inv


def _new_level(point, degree, dtype):
    lv = Level(point=point)
    lv.schreier = np.full(degree, -1, dtype=np.int32)
    lv.schreier[point] = -2
    lv.index = np.full(degree, -1, dtype=np.int32)
    lv.orbit.append(point)
    _add_rep(lv, point, _identity(degree, dtype))
    return lv


def _close_orbit(level, strong, new_gen=None):
    # Incremental breadth-first closure: points before ``level.bfs_done`` have
    # seen every older generator, so a new generator only needs those points
    # once, and fresh points see all generators.
    def visit(beta, gi):
        img = int(strong[gi][beta])
        if level.schreier[img] == -1:
            level.schreier[img] = gi
            level.orbit.append(img)
            level.tree_edges.add((beta, gi))
            _add_rep(level, img, strong[gi][level.reps[beta]])

    if new_gen is not None:
        for beta in level.orbit[:level.bfs_done]:
            visit(beta, new_gen)
    while level.bfs_done < len(level.orbit):
        beta = level.orbit[level.bfs_done]
        for gi in level.gens:
            visit(beta, gi)
        level.bfs_done += 1


def _sift(levels, g, start=0, points=None):
    """Strip ``g`` through ``levels[start:]``; return (residue, level where it stopped).

    Base images are scanned in one vectorized gather; a multiplication is only
    done at levels whose base point is actually moved.
    """
    if points is None:
        points = np.array([lv.point for lv in levels], dtype=np.int64)
    j = start
    depth = len(levels)
    while j < depth:
        rest = points[j:]
        imgs = g[rest]
        moved = np.flatnonzero(imgs != rest)
        if moved.size == 0:
            return g, depth
        j += int(moved[0])
        inv = levels[j].inv_reps.get(int(imgs[moved[0]]))
        if inv is None:
            return g, j
        g = inv[g]
        j += 1
    return g, depth


def _first_failure(levels, H, start, points):
    """Row index of the first Schreier generator in ``H`` that does not sift
    to the identity through ``levels[start:]``, or None.

    Sifts all rows at once; rows after a known failure are dropped since only
    the earliest one matters.
    """
    G = H
    rows = np.arange(G.shape[0])
    first = None
    for j in range(start, len(levels)):
        if rows.size == 0:
            break
        b = points[j]
        img = G[:, b]
        moved = np.flatnonzero(img != b)
        if moved.size == 0:
            continue
        lv = levels[j]
        idx = lv.index[img[moved]]
        bad = idx < 0
        if bad.any():
            r = int(rows[moved[bad][0]])
            first = r if first is None else min(first, r)
            keep = rows < first
            keep[moved[bad]] = False
            sel = np.flatnonzero(keep)
            pos = np.full(rows.size, -1, dtype=np.int64)
            pos[sel] = np.arange(sel.size)
            G, rows = G[sel], rows[sel]
            good = moved[~bad]
            good_pos = pos[good]
            mask = good_pos >= 0
            moved, idx = good_pos[mask], idx[~bad][mask]
            if moved.size == 0:
                continue
        G[moved] = _rowwise(lv.inverse_matrix()[idx], G[moved])
    if rows.size:
        ident = np.arange(G.shape[1], dtype=G.dtype)
        nontriv = np.flatnonzero((G != ident).any(axis=1))
        if nontriv.size:
            r = int(rows[nontriv[0]])
            first = r if first is None else min(first, r)
    return first


def _rowwise(A, B):
    # out[r, c] = A[r, B[r, c]]
    k, N = B.shape
    off = (np.arange(k, dtype=np.int64) * N)[:, None]
    return A.ravel()[B + off]


def _schreier_gens(lv, strong, todo):
    """Rows u_beta * s * u_{beta^s}^-1 for (local gen, orbit position) pairs."""
    betas = [lv.orbit[pos] for _, pos in todo]
    reps = np.stack([strong[lv.gens[li]][lv.reps[b]] for (li, _), b in zip(todo, betas)])
    targets = [int(strong[lv.gens[li]][b]) for (li, _), b in zip(todo, betas)]
    inv = lv.inverse_matrix()[lv.index[targets]]
    return _rowwise(inv, reps)


def _is_identity(g):
    return bool(np.array_equal(g, np.arange(g.size, dtype=g.dtype)))


def build_bsgs(gens) -> Bsgs:
    """Base and strong generating set of the group generated by ``gens``."""
    gens = [np.asarray(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].size
    for g in gens:
        if g.size != degree:
            raise DomainMismatch(f"generators act on {degree} and {g.size} points")
    dtype = _index_dtype(degree)
    gens = [g.astype(dtype) for g in gens]

    strong: list = []
    levels: list = []

    def add_strong(h, upto):
        # Register h at levels 0..upto-1 (it fixes their base points up to that
        # depth) and at a new level when it fixes every existing base point.
        idx = len(strong)
        strong.append(h)
        if upto == len(levels):
            moved = np.flatnonzero(h != np.arange(degree, dtype=dtype))
            levels.append(_new_level(int(moved[0]), degree, dtype))
        for j in range(upto + 1):
            levels[j].gens.append(idx)
            levels[j].checked.append(0)
            _close_orbit(levels[j], strong, idx)

    for g in gens:
        h, j = _sift(levels, g)
        if j < len(levels) or not _is_identity(h):
            add_strong(h, j)

    points = np.array([lv.point for lv in levels], dtype=np.int64)
    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        found = None
        while found is None:
            # next block of unchecked (orbit point, generator) pairs, in
            # generator-major order so the first failure matches a plain scan
            pairs = []
            for li, gi in enumerate(lv.gens):
                for pos in range(lv.checked[li], len(lv.orbit)):
                    if len(pairs) == BATCH:
                        break
                    pairs.append((li, pos))
                if len(pairs) == BATCH:
                    break
            if not pairs:
                break
            todo = [(li, pos) for li, pos in pairs
                    if (lv.orbit[pos], lv.gens[li]) not in lv.tree_edges]
            r = None
            if todo:
                H = _schreier_gens(lv, strong, todo)
                r = _first_failure(levels, H, i + 1, points)
            last = pairs[-1] if r is None else todo[r]
            for li, pos in pairs:
                if (li, pos) > last:
                    break
                lv.checked[li] = pos + 1
            if r is not None:
                found = _sift(levels, H[r].copy(), i + 1, points)
        if found is None:
            i -= 1
            continue
        r, j = found
        # r fixes base points 0..j-1; it joins levels i+1..j.
        idx = len(strong)
        strong.append(r)
        if j == len(levels):
            moved = np.flatnonzero(r != np.arange(degree, dtype=dtype))
            levels.append(_new_level(int(moved[0]), degree, dtype))
            points = np.append(points, levels[-1].point)
        for l in range(i + 1, j + 1):
            levels[l].gens.append(idx)
            levels[l].checked.append(0)
            _close_orbit(levels[l], strong, idx)
        i = j

    return Bsgs(degree, [lv.point for lv in levels], strong, levels)


def sift(b: Bsgs, g) -> np.ndarray:
    """Residue of ``g`` after stripping through the chain; identity iff ``g`` is in the group."""
    g = np.asarray(g)
    if g.size != b.degree:
        raise DomainMismatch(f"permutation on {g.size} points, group on {b.degree}")
    r, j = _sift(b.levels, g.astype(_index_dtype(b.degree)))
    return r.astype(np.int64)


def contains(b: Bsgs, g) -> bool:
    return _is_identity(sift(b, g))


def order_exponent(b: Bsgs) -> OrderExponent:
    sizes = tuple(b.orbit_sizes)
    if all(s & (s - 1) == 0 for s in sizes):
        return OrderExponent(sum(s.bit_length() - 1 for s in sizes), True, sizes)
    order = math.prod(sizes)
    return OrderExponent((order - 1).bit_length(), False, sizes)
