"""Run-length decoding over a two-letter alphabet of positive integers.

A decoding takes a start letter and a sequence of run lengths and expands it
into alternating runs: ``rld(Alphabet(3, 4), 4, [3, 2, 5, 1])`` gives
``(4, 4, 4, 3, 3, 4, 4, 4, 4, 4, 4, 3)``.  Because the output is again a
sequence of positive integers, decoding can be iterated; ``rld_n`` does that
with one start letter per level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptySequence, InvalidAlphabet, InvalidDigit


@dataclass(frozen=True)
class Alphabet:
    """An ordered pair of distinct positive integers ``(p, q)`` with ``p + q`` odd.

    The order matters only for the bit encoding used by the automaton and the
    tree groups: ``p`` is bit 0, ``q`` is bit 1.
    """

    p: int
    q: int
    strict: bool = True

    def __post_init__(self):
        p, q = self.p, self.q
        if not (isinstance(p, int) and isinstance(q, int)) or p < 1 or q < 1:
            raise InvalidAlphabet(f"letters must be positive integers, got ({p!r}, {q!r})")
        if p == q:
            raise InvalidAlphabet(f"letters must be distinct, got ({p}, {q})")
        if self.strict and (p + q) % 2 == 0:
            raise InvalidAlphabet(
                f"p + q must be odd, got {p} + {q} = {p + q}; with both letters "
                "odd (or both even) every state digit flips on every input "
                "(or never changes), so only odd-sum pairs are supported"
            )

    @classmethod
    def unchecked(cls, p: int, q: int) -> "Alphabet":
        """Alphabet without the odd-sum restriction (used to study degenerate pairs)."""
        return cls(p, q, strict=False)

    @property
    def letters(self) -> tuple[int, int]:
        return (self.p, self.q)

    def check(self, d: int) -> int:
        if d != self.p and d != self.q:
            raise InvalidDigit(f"{d!r} is not a letter of {{{self.p}, {self.q}}}")
        return d

    def bit(self, d: int) -> int:
        return 0 if self.check(d) == self.p else 1

    def digit(self, b: int) -> int:
        return self.q if b else self.p

    def opp(self, d: int) -> int:
        return self.q if self.check(d) == self.p else self.p

    def __str__(self):
        return f"{{{self.p},{self.q}}}"


def opp(a: Alphabet, d: int) -> int:
    """The other letter of the alphabet."""
    return a.opp(d)


def opp_end(a: Alphabet, s: Sequence[int]) -> int:
    """Opp of the last element of ``s``."""
    if len(s) == 0:
        raise EmptySequence("opp_end of an empty sequence")
    return a.opp(s[-1])


def _check_lengths(lengths: Iterable[int]) -> tuple[int, ...]:
    out = tuple(lengths)
    for x in out:
        if not isinstance(x, (int,)) or x < 1:
            raise ValueError(f"run lengths must be positive integers, got {x!r}")
    return out


def rld(a: Alphabet, start: int, lengths: Iterable[int]) -> tuple[int, ...]:
    """Decode run lengths into alternating runs of ``start`` and ``opp(start)``.

    Run lengths may be any positive integers, not just letters of ``a``.
    """
    cur = a.check(start)
    other = a.opp(cur)
    out = []
    for k in _check_lengths(lengths):
        out.extend([cur] * k)
        cur, other = other, cur
    return tuple(out)


def rld_levels(a: Alphabet, starts: Sequence[int], lengths: Iterable[int]) -> list[tuple[int, ...]]:
    """All intermediate decodings ``[RLD_1, ..., RLD_n]`` of an n-fold decoding."""
    if len(starts) < 1:
        raise ValueError("need at least one start letter")
    levels = []
    cur = _check_lengths(lengths)
    for x in starts:
        cur = rld(a, x, cur)
        levels.append(cur)
    return levels


def rld_n(a: Alphabet, starts: Sequence[int], lengths: Iterable[int]) -> tuple[int, ...]:
    """n-fold iterated decoding, ``starts[i]`` being the start letter at level i+1."""
    return rld_levels(a, starts, lengths)[-1]


def emit_blocks(a: Alphabet, starts: Sequence[int], lengths: Sequence[int]):
    """Split an iterated decoding into the blocks emitted per input symbol.

    Returns ``[(state, block), ...]`` where the first state is ``starts`` and
    each following state is the automaton step of the previous one on the
    previous symbol.  The blocks concatenate to ``rld_n(a, starts, lengths)``.
    """
    from .automaton import step

    if len(lengths) == 0:
        raise EmptySequence("emit_blocks needs at least one input symbol")
    state = tuple(a.check(x) for x in starts)
    blocks = []
    for s in lengths:
        blocks.append((state, rld_n(a, state, (s,))))
        state = step(a, state, s)
    return blocks
