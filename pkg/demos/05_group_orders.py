"""Orders of the automaton groups K_n against the J_n formula.

Pass a depth as the first argument (default 9).  n = 12 reproduces the full
table but takes several minutes.
"""

import sys
import time

from rldgroups import Alphabet, verify_conjecture

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 9
for a in (Alphabet(1, 2), Alphabet(2, 3)):
    t0 = time.perf_counter()
    rep = verify_conjecture(a, n_max)
    print(f"alphabet {a}  ({time.perf_counter() - t0:.1f}s)")
    print(rep.to_csv(), end="")
    inside = [r.n for r in rep.records if r.containment_ok]
    print(f"J_n sits inside K_n (checked element by element) for n in {inside}")
    print("orders agree:", rep.all_equal, "\n")
