"""Cycle structure of the automaton under input words, and the maximal-orbit law."""

from rldgroups import Alphabet, cycle_structure, gen_p, square_split_check, verify_theorem3
from rldgroups.perm import format_cycle_type

a = Alphabet(1, 2)

# %% One word at a time.
for word in [(1,), (2,), (1, 2), (1, 2, 2), (2, 2, 2)]:
    r = cycle_structure(a, 5, word)
    print(f"{word}: {format_cycle_type(r.cycle_type):12s} max-length cycles {r.max_count}  "
          f"odd length and odd sum: {r.predicate}")

# %% Every word up to length 8: two maximal cycles exactly when the word has
# odd length and odd letter sum, none otherwise.
for n in (3, 5, 7):
    rep = verify_theorem3(a, n, 8)
    print(f"n={n}: {rep.words} words, counterexamples {len(rep.counterexamples)}")

# %% Squaring halves every cycle, and the square splits over the four
# grandchild subtrees.
rep = square_split_check(a, gen_p(a, 5))
print("cycles of [1]_5:", rep.cycle_type, " of its square:", rep.square_cycle_type)
print("restrictions of the square:", rep.restriction_cycle_types, " consistent:", rep.ok)
