"""Run-length decoding, iterated decoding, and how the automaton splits it into blocks."""

from rldgroups import Alphabet, emit_blocks, rld, rld_levels, rld_n
from rldgroups.automaton import state_label

# %% A single decoding: runs alternate, starting from the given letter.
a = Alphabet(3, 4)
print("rld {3,4} from 4 of (3,2,5,1):", rld(a, 4, (3, 2, 5, 1)))

# %% Decoding is iterated by feeding each output back in as run lengths.
a = Alphabet(3, 2)
for i, level in enumerate(rld_levels(a, (2, 3, 2), (1, 2)), 1):
    print(f"level {i}:", "".join(map(str, level)))

# %% Each input symbol emits one block, and the automaton state tracks where
# the next block starts.  The blocks concatenate to the full decoding.
a = Alphabet(1, 2)
blocks = emit_blocks(a, (2, 1, 2), (1, 2, 1, 2))
for state, block in blocks:
    print(f"state {state_label(state)} emits {''.join(map(str, block))}")
whole = rld_n(a, (2, 1, 2), (1, 2, 1, 2))
assert sum((b for _, b in blocks), ()) == whole
print("concatenation:", "".join(map(str, whole)))

# %% The Kolakoski sequence is the self-describing decoding over {1,2}
# starting with 1.  Iterating from a short seed grows a longer prefix.
seq = (1, 2, 2)
for _ in range(6):
    seq = rld(a, 1, seq)
print("Kolakoski prefix:", "".join(map(str, seq[:60])))
