"""The invariants psi and Delta, membership in J_n, and counting J_n."""

import numpy as np

from rldgroups import (
    Alphabet, delta, enumerate_jn, first_violation, gen_p, gen_q, gen_y, is_member,
    jn_order_exponent, mul, psi,
)
from rldgroups.tree import TreeAut

a = Alphabet(1, 2)

# %% The generators land on fixed values.
for n in (4, 7, 10):
    print(f"n={n}: psi(y)={psi(a, gen_y(a, n))}  psi([1])={psi(a, gen_p(a, n))}  "
          f"Delta([2])={delta(a, gen_q(a, n))}")

# %% Both invariants are homomorphisms.
rng = np.random.default_rng(1)
n = 8
g = mul(gen_p(a, n), gen_q(a, n))
h = mul(gen_q(a, n), mul(gen_q(a, n), gen_p(a, n)))
print("psi(gh) =", psi(a, mul(g, h)), " psi(g)+psi(h) =", psi(a, g) + psi(a, h))
print("Delta(gh) =", delta(a, mul(g, h)), " Delta(g)Delta(h) =", delta(a, g) * delta(a, h))

# %% A single flip below the root breaks the constraint linking the two
# children, and the offending node is reported as a path from the root.
bad = TreeAut.from_array(3, [0, 1, 0, 0, 0, 0, 0])
print("member?", is_member(a, bad), "first violation at", repr(first_violation(a, bad)))

# %% J_n is enumerated constructively; its size follows a closed formula.
for n in range(1, 7):
    count = sum(1 for _ in enumerate_jn(a, n))
    print(f"|J_{n}| = 2^{count.bit_length() - 1}  formula 2^{jn_order_exponent(n)}")
