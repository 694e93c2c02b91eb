"""The permutation automaton driving n-fold iterated run-length decoding.

States are length-n tuples of letters.  On input ``s`` the state digit at
level i becomes ``OppEnd(RLD_i(x[:i], s))``: it flips exactly when the
(i-1)-fold decoding of ``s`` has odd length.  States are numbered by reading
the digits as bits, first digit most significant, ``p`` = 0 and ``q`` = 1, so
that leaf indices line up with the binary tree used by :mod:`rldgroups.tree`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import perm as P
from .errors import CapExceeded
from .rld import Alphabet, rld

TABLE_CAP = 20


def encode(a: Alphabet, digits: Sequence[int]) -> int:
    leaf = 0
    for d in digits:
        leaf = (leaf << 1) | a.bit(d)
    return leaf


def decode(a: Alphabet, n: int, leaf: int) -> tuple[int, ...]:
    if not 0 <= leaf < (1 << n):
        raise ValueError(f"leaf {leaf} out of range for n={n}")
    return tuple(a.digit((leaf >> (n - 1 - i)) & 1) for i in range(n))


def state_label(digits: Sequence[int]) -> str:
    return "".join(str(d) for d in digits)


def _advance(a: Alphabet, x: Sequence[int], word: Sequence[int], inverse: bool = False):
    # Level i flips iff the word decoded through levels 1..i-1 has odd length.
    # Forward: decode with the incoming digit; inverse: with the recovered one.
    n = len(x)
    out = []
    w = tuple(word)
    length = len(w)
    for i, xi in enumerate(x):
        a.check(xi)
        yi = a.opp(xi) if length % 2 else xi
        out.append(yi)
        if i + 1 < n:
            src = yi if inverse else xi
            if i + 2 < n:
                w = rld(a, src, w)
                length = len(w)
            else:
                length = sum(w)
    return tuple(out)


def step(a: Alphabet, x: Sequence[int], s: int) -> tuple[int, ...]:
    """One transition ``A_n(x, s)`` for a single input letter ``s``."""
    return _advance(a, x, (a.check(s),))


def step_word(a: Alphabet, x: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
    """Left fold of :func:`step` over ``w``; the empty word leaves ``x`` unchanged."""
    state = tuple(a.check(d) for d in x)
    for s in w:
        state = step(a, state, s)
    return state


def inverse_step(a: Alphabet, y: Sequence[int], s: int) -> tuple[int, ...]:
    """The unique ``x`` with ``step(a, x, s) == y``."""
    return _advance(a, y, (a.check(s),), inverse=True)


@dataclass(frozen=True, eq=False)
class TransitionTable:
    """Both symbol maps of ``A_n`` as permutations of leaf indices."""

    alphabet: Alphabet
    n: int
    images: tuple  # (map for p, map for q), numpy int arrays

    def perm(self, s: int) -> np.ndarray:
        return self.images[self.alphabet.bit(s)]

    def next_state(self, leaf: int, s: int) -> int:
        return int(self.perm(s)[leaf])

    def rows(self):
        """Yield ``(state, symbol, next_state)`` with states as digit tuples."""
        a, n = self.alphabet, self.n
        for leaf in range(1 << n):
            x = decode(a, n, leaf)
            for s in a.letters:
                yield x, s, decode(a, n, self.next_state(leaf, s))


@lru_cache(maxsize=64)
def _table_images(a: Alphabet, n: int):
    # A_n(b.rest, s) = (1 - b, A_{n-1}(rest, b repeated s times)): a single
    # letter is a word of odd length, so the top digit always flips, and the
    # subtree map is the s-th power of the depth n-1 map for letter b.
    if n == 1:
        return (np.array([1, 0]), np.array([1, 0]))
    lower = _table_images(a, n - 1)
    half = 1 << (n - 1)
    out = []
    for s in a.letters:
        parts = [P.power(lower[b], s) + (1 - b) * half for b in (0, 1)]
        img = np.concatenate(parts)
        img.setflags(write=False)
        out.append(img)
    return tuple(out)


def build_table(a: Alphabet, n: int, cap: int = TABLE_CAP) -> TransitionTable:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"build_table: n={n} exceeds cap {cap}")
    return TransitionTable(a, n, _table_images(a, n))


def symbol_permutation(a: Alphabet, n: int, s: int) -> np.ndarray:
    return build_table(a, n).perm(s)


def word_permutation(a: Alphabet, n: int, word: Sequence[int]) -> np.ndarray:
    """Permutation of all states induced by an input word."""
    t = build_table(a, n)
    return P.compose_word(t.images, [a.bit(s) for s in word], 1 << n)


def to_dot(t: TransitionTable) -> str:
    """Graphviz rendering: one node per state, one labelled edge per (state, symbol)."""
    a, n = t.alphabet, t.n
    lines = [f'digraph "A_{n}^{{{a.p},{a.q}}}" {{']
    for leaf in range(1 << n):
        lab = state_label(decode(a, n, leaf))
        lines.append(f'  "{lab}" [label="{lab}"];')
    for x, s, y in t.rows():
        lines.append(f'  "{state_label(x)}" -> "{state_label(y)}" [label="{s}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
