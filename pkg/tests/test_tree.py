import numpy as np
import pytest
from hypothesis import given, strategies as st

from rldgroups import (
    Alphabet, TreeAut, act_on_leaf, from_hex, from_parts, gen_p, identity, inverse, mul,
    restrict, symbol_permutation, to_hex, to_permutation,
)
from rldgroups.errors import DepthMismatch, LeafOutOfRange, SwappedPrefix
from rldgroups.perm import compose, invert
from rldgroups.tree import from_permutation, power, random_element, root_flip


def portraits(n_min=1, n_max=8):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.lists(st.integers(0, 1), min_size=(1 << n) - 1, max_size=(1 << n) - 1)
        .map(lambda bits: TreeAut.from_array(n, bits)))


def same_depth(k, n_min=1, n_max=8):
    return st.integers(n_min, n_max).flatmap(lambda n: st.tuples(*[
        st.lists(st.integers(0, 1), min_size=(1 << n) - 1, max_size=(1 << n) - 1)
        .map(lambda bits, n=n: TreeAut.from_array(n, bits)) for _ in range(k)]))


def test_identity():
    assert identity(3).bits == bytes(7)
    for n in range(1, 9):
        assert np.array_equal(to_permutation(identity(n)), np.arange(1 << n))


def test_wrong_portrait_length():
    with pytest.raises(ValueError):
        TreeAut(3, bytes(6))


def test_parts_accessors():
    rng = np.random.default_rng(1)
    for n in range(2, 7):
        g = random_element(n, rng)
        assert from_parts(g.flip, g.left, g.right) == g


def test_wreath_rule_both_flipped():
    rng = np.random.default_rng(2)
    A, B, C, D = (random_element(4, rng) for _ in range(4))
    assert mul(from_parts(1, A, B), from_parts(1, C, D)) == from_parts(0, mul(A, D), mul(B, C))
    assert mul(from_parts(0, A, B), from_parts(1, C, D)) == from_parts(1, mul(A, C), mul(B, D))


@given(same_depth(2))
def test_mul_is_composition(pair):
    g, h = pair
    assert np.array_equal(to_permutation(mul(g, h)), compose(to_permutation(g), to_permutation(h)))


@given(same_depth(3, n_max=6))
def test_associative(triple):
    g, h, k = triple
    assert mul(mul(g, h), k) == mul(g, mul(h, k))


@given(portraits())
def test_identity_and_inverse_laws(g):
    e = identity(g.n)
    assert mul(e, g) == g == mul(g, e)
    assert mul(g, inverse(g)) == e == mul(inverse(g), g)
    assert np.array_equal(to_permutation(inverse(g)), invert(to_permutation(g)))


def test_inverse_of_identity():
    assert inverse(identity(5)) == identity(5)


@given(portraits(n_max=5))
def test_order_is_power_of_two(g):
    # squaring n times kills any element of the automorphism group of a depth-n tree
    h = g
    for _ in range(g.n):
        h = mul(h, h)
    assert h.is_identity()
    assert inverse(g) == power(g, (1 << g.n) - 1)


def test_depth_mismatch():
    with pytest.raises(DepthMismatch):
        mul(identity(2), identity(3))


def test_act_on_leaf():
    g = root_flip(4)
    for leaf in range(16):
        assert act_on_leaf(identity(4), leaf) == leaf
        assert act_on_leaf(g, leaf) == leaf ^ 0b1000
    with pytest.raises(LeafOutOfRange):
        act_on_leaf(g, 16)
    with pytest.raises(LeafOutOfRange):
        act_on_leaf(g, -1)


@given(portraits())
def test_to_permutation_matches_leaf_walk(g):
    perm = to_permutation(g)
    for leaf in range(min(1 << g.n, 64)):
        assert perm[leaf] == act_on_leaf(g, leaf)


def test_generator_acts_like_automaton():
    a = Alphabet(1, 2)
    g = gen_p(a, 3)
    perm = symbol_permutation(a, 3, 1)
    for leaf in range(8):
        assert act_on_leaf(g, leaf) == perm[leaf]


@given(portraits())
def test_permutation_round_trip(g):
    assert from_permutation(g.n, to_permutation(g)) == g


def test_from_permutation_rejects_wrong_size():
    with pytest.raises(ValueError):
        from_permutation(2, [0, 1, 2])


def test_from_permutation_rejects_cross_swap():
    # swapping leaves 0 and 2 alone moves a leaf without its sibling
    with pytest.raises(ValueError):
        from_permutation(2, [2, 1, 0, 3])


def test_restrict():
    rng = np.random.default_rng(3)
    g = random_element(5, rng)
    assert restrict(g, ()) == g
    h = from_parts(0, g.left, g.right)
    assert restrict(h, (1,)) == g.right
    with pytest.raises(SwappedPrefix):
        restrict(from_parts(1, g.left, g.right), (0,))


def test_hex_format():
    assert to_hex(identity(3)) == "3:00"
    assert to_hex(root_flip(3)) == "3:80"
    assert to_hex(identity(4)) == "4:0000"


@given(portraits(n_max=10))
def test_hex_round_trip(g):
    assert from_hex(to_hex(g)) == g


@pytest.mark.parametrize("text", ["", "3", "3:0", "3:zz", "0:", "3:01", "3:0000", "x:00"])
def test_hex_malformed(text):
    with pytest.raises(ValueError):
        from_hex(text)
