"""The permutation automaton A_3 over {1,2}: transitions, cycles and a DOT drawing."""

import sys

from rldgroups import Alphabet, build_table, step, to_dot
from rldgroups.automaton import state_label
from rldgroups.perm import cycles, format_cycle_type, cycle_type
from rldgroups import decode

a = Alphabet(1, 2)
t = build_table(a, 3)

# %% Every state has one outgoing edge per letter.
for x, s, y in t.rows():
    print(f"{state_label(x)} --{s}--> {state_label(y)}")

# %% Each letter permutes the eight states.
for s in a.letters:
    perm = t.perm(s)
    print(f"letter {s}: cycle type {format_cycle_type(cycle_type(perm))}")
    for c in cycles(perm):
        print("   ", " -> ".join(state_label(decode(a, 3, v)) for v in c))

# %% A single transition can also be computed without the table.
print("A_3(212, 1) =", state_label(step(a, (2, 1, 2), 1)))

# %% Graphviz source; pipe into `dot -Tpng` to draw it.
if "--dot" in sys.argv:
    sys.stdout.write(to_dot(t))
