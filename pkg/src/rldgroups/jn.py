"""The recursively constrained groups J_n^{p,q} and their invariants.

Every element ``g`` of J_n carries a residue ``psi_n(g)`` mod ``2^(n//2)``
and a dihedral element ``Delta_n(g) = (g_f, x)`` with ``x`` mod
``2^(n//2)``.  Membership asks that both children are members and that
``Delta(g_L) == Phi(Delta(g_R))``.  Exact division by ``p+q`` is done by
multiplying with its inverse modulo a power of two (``p+q`` is odd).

Evaluation works bottom up over the whole portrait at once: all nodes of one
depth are handled together with numpy, so a single pass yields membership,
``psi`` and ``Delta`` for every subtree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from collections import defaultdict
from typing import Iterator

import numpy as np

from .errors import CapExceeded, ModulusMismatch, NotAMember
from .rld import Alphabet
from .tree import TreeAut, from_parts, identity, power, root_flip

ENUM_CAP = 6


@dataclass(frozen=True)
class Residue:
    """An element of Z/2^k, stored as its canonical representative."""

    value: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % (1 << self.k))

    def _same(self, other):
        if not isinstance(other, Residue) or other.k != self.k:
            raise ModulusMismatch(f"residues mod 2^{self.k} and {other!r}")
        return other

    def __add__(self, other):
        return Residue(self.value + self._same(other).value, self.k)

    def __sub__(self, other):
        return Residue(self.value - self._same(other).value, self.k)

    def __neg__(self):
        return Residue(-self.value, self.k)

    def __str__(self):
        return f"{self.value} mod {1 << self.k}"


@dataclass(frozen=True)
class DihedralElem:
    """``(f, x)`` in the dihedral group of order ``2^(k+1)``, ``x`` mod ``2^k``."""

    f: int
    x: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "f", self.f & 1)
        object.__setattr__(self, "x", self.x % (1 << self.k))

    def __mul__(self, other):
        return dihedral_mul(self, other)

    def __str__(self):
        return f"({self.f}, {self.x} mod {1 << self.k})"


def dihedral_mul(d1: DihedralElem, d2: DihedralElem) -> DihedralElem:
    """``(f1, x1)(f2, x2) = (f1 + f2, x1 + (-1)^f1 x2)``."""
    if d1.k != d2.k:
        raise ModulusMismatch(f"dihedral moduli differ: 2^{d1.k} vs 2^{d2.k}")
    sign = -1 if d1.f else 1
    return DihedralElem(d1.f + d2.f, d1.x + sign * d2.x, d1.k)


def phi(a: Alphabet, d: DihedralElem) -> DihedralElem:
    """The involution ``(f, x) -> (f, [f=1](p+q)(p-q) - x)``."""
    return DihedralElem(d.f, d.f * (a.p + a.q) * (a.p - a.q) - d.x, d.k)


@dataclass(frozen=True, eq=False)
class _Analysis:
    member: list  # per depth: bool array
    psi: list     # per depth: int array, mod 2^((n-d)//2)
    dx: list      # per depth: int array
    cause: list   # per depth: bool array, local relation fails with member children


@lru_cache(maxsize=1 << 16)
def _analyze(a: Alphabet, g: TreeAut) -> _Analysis:
    n = g.n
    s, t = a.p + a.q, a.p - a.q
    member = [None] * n
    psi = [None] * n
    dx = [None] * n
    cause = [None] * n
    for d in range(n - 1, -1, -1):
        m = n - d
        width = 1 << d
        f = g.level(d).astype(np.int64)
        if m == 1:
            member[d] = np.ones(width, dtype=bool)
            psi[d] = np.zeros(width, dtype=np.int64)
            dx[d] = np.zeros(width, dtype=np.int64)
            cause[d] = np.zeros(width, dtype=bool)
            continue
        fc = g.level(d + 1).astype(np.int64)
        fl, fr = fc[0::2], fc[1::2]
        mod = 1 << (m // 2)
        if m == 2:
            ok = fl == fr
            member[d] = ok
            cause[d] = ~ok
            psi[d] = fl % mod
            dx[d] = psi[d].copy()
            continue
        cmod = 1 << ((m - 1) // 2)
        mem_l, mem_r = member[d + 1][0::2], member[d + 1][1::2]
        dx_l, dx_r = dx[d + 1][0::2], dx[d + 1][1::2]
        rel = (fl == fr) & (dx_l % cmod == (fr * s * t - dx_r) % cmod)
        kids = mem_l & mem_r
        member[d] = kids & rel
        cause[d] = kids & ~rel
        psi_l, psi_r = psi[d + 1][0::2], psi[d + 1][1::2]
        if m % 2:
            psi[d] = ((psi_l + psi_r) * pow(s, -1, mod)) % mod
            dx[d] = (psi_l - psi_r) % mod
        else:
            gc = psi[d + 2]
            psi_ll, psi_rl = gc[0::4], gc[2::4]
            psi[d] = ((2 * (psi_ll + psi_rl) - fl * s * t) * pow(s * s, -1, mod)) % mod
            dx[d] = (s * psi[d] - 2 * psi_r) % mod
    return _Analysis(member, psi, dx, cause)


def _path(d: int, j: int) -> str:
    return "".join("LR"[(j >> (d - 1 - i)) & 1] for i in range(d))


def first_violation(a: Alphabet, g: TreeAut):
    """Path (string of L/R, root = "") of the first failing node in breadth-first order, or None."""
    an = _analyze(a, g)
    for d in range(g.n):
        hits = np.flatnonzero(an.cause[d])
        if hits.size:
            return _path(d, int(hits[0]))
    return None


def is_member(a: Alphabet, g: TreeAut) -> bool:
    return bool(_analyze(a, g).member[0][0])


def _require_member(a, g):
    an = _analyze(a, g)
    if not an.member[0][0]:
        path = first_violation(a, g)
        raise NotAMember(f"element is not in J_{g.n}^{{{a.p},{a.q}}} (first violation at node '{path}')", path)
    return an


def psi(a: Alphabet, g: TreeAut) -> Residue:
    an = _require_member(a, g)
    return Residue(int(an.psi[0][0]), g.n // 2)


def delta(a: Alphabet, g: TreeAut) -> DihedralElem:
    an = _require_member(a, g)
    return DihedralElem(g.flip, int(an.dx[0][0]), g.n // 2)


@lru_cache(maxsize=None)
def _gens(a: Alphabet, n: int):
    if n == 1:
        f = root_flip(1)
        return f, f
    gp, gq = _gens(a, n - 1)
    return (
        from_parts(1, power(gp, a.p), power(gq, a.p)),
        from_parts(1, power(gp, a.q), power(gq, a.q)),
    )


def gen_p(a: Alphabet, n: int) -> TreeAut:
    """``[p]_n = (1, [p]_{n-1}^p, [q]_{n-1}^p)``, ``[p]_1`` the root flip."""
    return _gens(a, n)[0]


def gen_q(a: Alphabet, n: int) -> TreeAut:
    return _gens(a, n)[1]


def gen_y(a: Alphabet, n: int) -> TreeAut:
    """``y_n = (0, [p]_{n-1}, [q]_{n-1})``; at n = 1 this is the identity."""
    if n == 1:
        return identity(1)
    gp, gq = _gens(a, n - 1)
    return from_parts(0, gp, gq)


def gen_f(n: int) -> TreeAut:
    return root_flip(n)


def jn_order_exponent(n: int) -> int:
    """``log2 |J_n| = ceil((2^n + 3n) / 6)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return -(-((1 << n) + 3 * n) // 6)


@lru_cache(maxsize=None)
def _jn_list(a: Alphabet, n: int) -> tuple:
    if n == 1:
        return (identity(1), root_flip(1))
    if n == 2:
        leaf = (identity(1), root_flip(1))
        return tuple(from_parts(f, x, x) for f in (0, 1) for x in leaf)
    prev = _jn_list(a, n - 1)
    by_delta = defaultdict(list)
    for r in prev:
        by_delta[delta(a, r)].append(r)
    out = []
    for f in (0, 1):
        for left in prev:
            for right in by_delta[phi(a, delta(a, left))]:
                out.append(from_parts(f, left, right))
    return tuple(out)


def enumerate_jn(a: Alphabet, n: int, cap: int = ENUM_CAP) -> Iterator[TreeAut]:
    """Yield every element of J_n exactly once.

    Built from ``(g_f, g_L, g_R)`` with ``g_f`` and ``g_L`` free and ``g_R``
    ranging over the elements of J_{n-1} whose Delta equals ``Phi(Delta(g_L))``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"enumerate_jn: n={n} exceeds cap {cap} (|J_n| = 2^{jn_order_exponent(n)})")
    yield from _jn_list(a, n)
