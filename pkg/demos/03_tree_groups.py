"""Tree automorphisms as portraits, the wreath product rule, and the automaton generators."""

import numpy as np

from rldgroups import Alphabet, gen_p, gen_q, gen_y, mul, symbol_permutation, to_hex, to_permutation
from rldgroups.tree import from_parts, power, random_element, root_flip

rng = np.random.default_rng(0)

# %% A portrait has one flip bit per internal node, breadth first.
g = random_element(3, rng)
print("portrait bits:", g.array.tolist(), "hex:", to_hex(g))
print("as a leaf permutation:", to_permutation(g).tolist())

# %% (f, A, B)(g, C, D): when the first factor swaps, the children cross over.
A, B, C, D = (random_element(2, rng) for _ in range(4))
lhs = mul(from_parts(1, A, B), from_parts(1, C, D))
assert lhs == from_parts(0, mul(A, D), mul(B, C))
print("swap-swap product keeps children crossed: ok")

# %% The automaton's letters are tree automorphisms defined recursively.
a = Alphabet(1, 2)
for n in range(1, 5):
    p_n = gen_p(a, n)
    assert np.array_equal(to_permutation(p_n), symbol_permutation(a, n, 1))
    print(f"[1]_{n} = {to_hex(p_n)}   [2]_{n} = {to_hex(gen_q(a, n))}")

# %% [p] = y^p f
n = 5
assert mul(power(gen_y(a, n), a.p), root_flip(n)) == gen_p(a, n)
assert mul(power(gen_y(a, n), a.q), root_flip(n)) == gen_q(a, n)
print("generator factorization checked at n =", n)
