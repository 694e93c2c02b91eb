"""Cycle structure of the automaton under an input word.

For odd n >= 3 the automaton ``A_n(-, s)`` has either exactly two cycles of
the maximal length ``2^ceil(n/2)`` or none, and it has two precisely when the
word has odd length and odd letter sum.  This module computes cycle types and
sweeps all short words to check that law, along with the power-of-two and
upper-bound laws that hold for every n.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .automaton import TABLE_CAP, build_table
from .errors import BudgetExceeded, CapExceeded, EmptyWord, EvenN, NotAMember
from .jn import is_member, psi
from .perm import compose_word, cycle_type
from .rld import Alphabet
from .tree import TreeAut, mul, restrict, to_permutation

DEFAULT_BUDGET = 1 << 32


def max_orbit_length(n: int) -> int:
    return 1 << ((n + 1) // 2)


def theorem3_predicate(word: Sequence[int]) -> bool:
    """Odd length and odd letter sum."""
    return len(word) % 2 == 1 and sum(word) % 2 == 1


def _is_pow2(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


@dataclass
class OrbitReport:
    word: tuple
    n: int
    cycle_type: dict
    max_len: int
    max_count: int
    predicate: bool

    @property
    def powers_of_two(self) -> bool:
        return all(_is_pow2(k) for k in self.cycle_type)

    @property
    def within_bound(self) -> bool:
        return max(self.cycle_type) <= self.max_len

    @property
    def agrees(self) -> bool:
        """Two maximal cycles exactly when the predicate holds, none otherwise."""
        return self.max_count == (2 if self.predicate else 0)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["word"] = list(self.word)
        d["cycle_type"] = {str(k): v for k, v in self.cycle_type.items()}
        return d


def _report(word, n, perm) -> OrbitReport:
    ct = cycle_type(perm)
    top = max_orbit_length(n)
    return OrbitReport(tuple(word), n, ct, top, ct.get(top, 0), theorem3_predicate(word))


def cycle_structure(a: Alphabet, n: int, word: Sequence[int], cap: int = TABLE_CAP) -> OrbitReport:
    """Cycle type of the state permutation induced by ``word``."""
    if len(word) == 0:
        raise EmptyWord("cycle_structure needs a nonempty word")
    if n > cap:
        raise CapExceeded(f"cycle_structure: n={n} exceeds cap {cap}")
    t = build_table(a, n)
    perm = compose_word(t.images, [a.bit(s) for s in word], 1 << n)
    return _report(word, n, perm)


def _words_with_perms(a: Alphabet, n: int, max_len: int):
    # Depth-first over the prefix tree so each word costs one composition.
    t = build_table(a, n)
    ident = np.arange(1 << n, dtype=np.int64)

    def walk(prefix, perm):
        if prefix:
            yield prefix, perm
        if len(prefix) < max_len:
            for b, s in enumerate(a.letters):
                yield from walk(prefix + (s,), t.images[b][perm])

    yield from walk((), ident)


def all_words(a: Alphabet, max_len: int):
    """Every nonempty word of length <= max_len, shortest first."""
    for k in range(1, max_len + 1):
        yield from itertools.product(a.letters, repeat=k)


@dataclass
class SweepReport:
    p: int
    q: int
    n: int
    max_word_len: int
    words: int = 0
    power_of_two_failures: list = field(default_factory=list)
    bound_failures: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.power_of_two_failures or self.bound_failures or self.counterexamples)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("rows")
        d["ok"] = self.ok
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["word", "length", "sum_parity", "max_count", "predicate", "agree"])
        for r in self.rows:
            w.writerow(["".join(map(str, r.word)), len(r.word), sum(r.word) % 2,
                        r.max_count, int(r.predicate), int(r.agrees)])
        return buf.getvalue()


def _check_budget(n, max_word_len, budget):
    work = (1 << (max_word_len + 1)) * (1 << n)
    if work > budget:
        raise BudgetExceeded(f"sweep needs ~{work} operations, budget is {budget}")


def verify_theorem3(a: Alphabet, n: int, max_word_len: int,
                    budget: int = DEFAULT_BUDGET, keep_rows: bool = False) -> SweepReport:
    """Check the maximal-orbit law on every word up to ``max_word_len`` (odd n >= 3)."""
    if n % 2 == 0:
        raise EvenN(f"the maximal-orbit criterion is stated for odd n, got n={n}")
    if n < 3:
        raise ValueError("the maximal-orbit criterion needs n >= 3")
    return _sweep(a, n, max_word_len, budget, keep_rows, assert_law=True)


def describe_orbits(a: Alphabet, n: int, max_word_len: int,
                    budget: int = DEFAULT_BUDGET) -> SweepReport:
    """Tabulate maximal-cycle counts against the predicate without asserting the law.

    Works for any n; for even n the rows are data only.
    """
    return _sweep(a, n, max_word_len, budget, keep_rows=True, assert_law=False)


def _sweep(a, n, max_word_len, budget, keep_rows, assert_law):
    _check_budget(n, max_word_len, budget)
    rep = SweepReport(a.p, a.q, n, max_word_len)
    found = []
    for word, perm in _words_with_perms(a, n, max_word_len):
        r = _report(word, n, perm)
        found.append(r)
        if not r.powers_of_two:
            rep.power_of_two_failures.append(r.to_dict())
        if not r.within_bound:
            rep.bound_failures.append(r.to_dict())
        if assert_law and not r.agrees:
            rep.counterexamples.append(r.to_dict())
    # report in shortest-first order regardless of traversal order
    found.sort(key=lambda r: (len(r.word), [a.bit(s) for s in r.word]))
    rep.words = len(found)
    if keep_rows:
        rep.rows = found
    return rep


def group_level_criterion(a: Alphabet, g: TreeAut) -> bool:
    """Odd psi and a root flip: the group-level form of the maximal-orbit test."""
    if g.n % 2 == 0:
        raise EvenN(f"criterion is stated for odd n, got n={g.n}")
    return psi(a, g).value % 2 == 1 and g.flip == 1


@dataclass
class SquareSplit:
    cycle_type: dict
    square_cycle_type: dict
    restriction_cycle_types: list
    top_flips_clear: bool
    restrictions_match_square: bool
    halving_ok: bool

    @property
    def ok(self) -> bool:
        return self.top_flips_clear and self.restrictions_match_square and self.halving_ok


def halved_cycle_type(ct: dict) -> dict:
    """Cycle type of g^2 predicted from that of g: each cycle of even length L splits in two of length L/2."""
    out: dict = {}
    for length, mult in ct.items():
        if length % 2 == 0:
            out[length // 2] = out.get(length // 2, 0) + 2 * mult
        else:
            out[length] = out.get(length, 0) + mult
    return dict(sorted(out.items()))


def square_split_check(a: Alphabet, g: TreeAut) -> SquareSplit:
    """Compare cycles of g with those of the four depth-2 restrictions of g^2."""
    if not is_member(a, g):
        raise NotAMember("square_split_check needs an element of J_n")
    if g.n < 3:
        raise ValueError("square_split_check needs n >= 3")
    sq = mul(g, g)
    clear = sq.bits[0] == 0 and sq.bits[1] == 0 and sq.bits[2] == 0
    ct = cycle_type(to_permutation(g))
    sq_ct = cycle_type(to_permutation(sq))
    parts = []
    if clear:
        for path in ((0, 0), (0, 1), (1, 0), (1, 1)):
            parts.append(cycle_type(to_permutation(restrict(sq, path))))
    merged: dict = {}
    for part in parts:
        for length, mult in part.items():
            merged[length] = merged.get(length, 0) + mult
    return SquareSplit(
        cycle_type=ct,
        square_cycle_type=sq_ct,
        restriction_cycle_types=parts,
        top_flips_clear=clear,
        restrictions_match_square=clear and dict(sorted(merged.items())) == sq_ct,
        halving_ok=halved_cycle_type(ct) == sq_ct,
    )
