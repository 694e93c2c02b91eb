import itertools
from collections import deque

import numpy as np
import pytest

from rldgroups import (
    Alphabet, DihedralElem, Residue, TreeAut, delta, dihedral_mul, enumerate_jn, first_violation,
    gen_f, gen_p, gen_q, gen_y, identity, inverse, is_member, jn_order_exponent, mul, phi, psi,
    symbol_permutation, to_permutation,
)
from rldgroups.errors import CapExceeded, ModulusMismatch, NotAMember
from rldgroups.tree import from_parts, power, root_flip

from conftest import TESTED, random_word_element


def test_residue_arithmetic():
    r = Residue(7, 2)
    assert r.value == 3
    assert (Residue(3, 3) + Residue(6, 3)).value == 1
    assert (-Residue(1, 3)).value == 7
    assert Residue(5, 0).value == 0
    with pytest.raises(ModulusMismatch):
        Residue(1, 2) + Residue(1, 3)


def test_dihedral_mul():
    assert dihedral_mul(DihedralElem(0, 2, 3), DihedralElem(0, 5, 3)) == DihedralElem(0, 7, 3)
    assert dihedral_mul(DihedralElem(1, 0, 3), DihedralElem(1, 0, 3)) == DihedralElem(0, 0, 3)
    assert DihedralElem(1, 3, 3) * DihedralElem(0, 2, 3) == DihedralElem(1, 1, 3)
    with pytest.raises(ModulusMismatch):
        dihedral_mul(DihedralElem(0, 0, 2), DihedralElem(0, 0, 3))


def test_dihedral_group_laws():
    k = 3
    elems = [DihedralElem(f, x, k) for f in (0, 1) for x in range(1 << k)]
    for d1, d2, d3 in itertools.product(elems, repeat=3):
        assert (d1 * d2) * d3 == d1 * (d2 * d3)


def test_phi():
    a = Alphabet(1, 2)
    assert phi(a, DihedralElem(1, 2, 3)) == DihedralElem(1, 3, 3)
    for x in range(8):
        assert phi(a, DihedralElem(0, x, 3)) == DihedralElem(0, -x, 3)
    for b in TESTED + [Alphabet(1, 4)]:
        for f in (0, 1):
            for x in range(1 << 4):
                d = DihedralElem(f, x, 4)
                assert phi(b, phi(b, d)) == d


def _closure(gens):
    # breadth-first closure of a finite group under right multiplication
    e = identity(gens[0].n)
    seen = {e}
    todo = deque([e])
    while todo:
        g = todo.popleft()
        for s in gens:
            h = mul(g, s)
            if h not in seen:
                seen.add(h)
                todo.append(h)
    return seen


@pytest.mark.parametrize("a", TESTED, ids=str)
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_membership_by_brute_force(a, n):
    # at small depth the members are exactly the group generated by the automaton
    size = (1 << n) - 1
    members = set()
    for bits in itertools.product((0, 1), repeat=size):
        g = TreeAut(n, bytes(bits))
        if is_member(a, g):
            members.add(g)
    assert len(members) == 1 << jn_order_exponent(n)
    assert members == _closure([gen_p(a, n), gen_q(a, n)])
    assert members == set(enumerate_jn(a, n))


def test_member_count_n4():
    assert len(list(enumerate_jn(Alphabet(1, 2), 4))) == 32


@pytest.mark.parametrize("a", TESTED, ids=str)
def test_generators_are_members(a):
    for n in range(1, 11):
        for g in (identity(n), gen_p(a, n), gen_q(a, n), gen_y(a, n), gen_f(n)):
            assert is_member(a, g)


def test_generator_base_cases():
    a = Alphabet(1, 2)
    assert gen_p(a, 1) == gen_q(a, 1) == root_flip(1)
    assert gen_y(a, 1) == identity(1)
    assert gen_f(3) == root_flip(3)


@pytest.mark.parametrize("a", TESTED + [Alphabet(1, 4)], ids=str)
def test_generator_factorization(a):
    for n in range(2, 9):
        y, f = gen_y(a, n), gen_f(n)
        assert mul(power(y, a.p), f) == gen_p(a, n)
        assert mul(power(y, a.q), f) == gen_q(a, n)


@pytest.mark.parametrize("a", TESTED + [Alphabet(1, 4), Alphabet(3, 2)], ids=str)
def test_generators_match_automaton(a):
    for n in range(1, 11):
        assert np.array_equal(to_permutation(gen_p(a, n)), symbol_permutation(a, n, a.p))
        assert np.array_equal(to_permutation(gen_q(a, n)), symbol_permutation(a, n, a.q))


@pytest.mark.parametrize("a", TESTED + [Alphabet(1, 4)], ids=str)
def test_generator_invariants(a):
    p, q = a.p, a.q
    for n in range(1, 11):
        k = n // 2
        assert psi(a, gen_y(a, n)) == Residue(1, k)
        assert psi(a, gen_p(a, n)) == Residue(p, k)
        assert psi(a, gen_q(a, n)) == Residue(q, k)
        assert delta(a, gen_y(a, n)) == DihedralElem(0, p - q, k)
        assert delta(a, gen_p(a, n)) == DihedralElem(1, p * (p - q), k)
        assert delta(a, gen_q(a, n)) == DihedralElem(1, q * (p - q), k)
        assert psi(a, identity(n)) == Residue(0, k)
        assert delta(a, identity(n)) == DihedralElem(0, 0, k)


def test_gen_p_depth_four():
    a = Alphabet(1, 2)
    assert psi(a, gen_p(a, 4)) == Residue(1, 2)
    assert delta(a, gen_p(a, 4)) == DihedralElem(1, 3, 2)


@pytest.mark.parametrize("a", TESTED, ids=str)
@pytest.mark.parametrize("n", range(3, 10))
def test_homomorphisms_on_random_words(a, n):
    rng = np.random.default_rng(1000 + n)
    for _ in range(40):
        g = random_word_element(a, n, rng)
        h = random_word_element(a, n, rng)
        gh = mul(g, h)
        assert is_member(a, gh) and is_member(a, inverse(g))
        assert psi(a, gh) == psi(a, g) + psi(a, h)
        assert delta(a, gh) == delta(a, g) * delta(a, h)


def test_non_member_reports_path():
    a = Alphabet(1, 2)
    g = TreeAut.from_array(3, [0, 0, 1, 0, 0, 0, 0])
    assert not is_member(a, g)
    assert first_violation(a, g) == ""
    with pytest.raises(NotAMember) as exc:
        psi(a, g)
    assert exc.value.path == ""
    with pytest.raises(NotAMember):
        delta(a, g)
    # same defect one level down, inside the left subtree
    deep = from_parts(0, g, g)
    assert first_violation(a, deep) == "L"
    assert first_violation(a, identity(5)) is None


def test_order_formula():
    assert [jn_order_exponent(n) for n in range(1, 13)] == [1, 2, 3, 5, 8, 14, 25, 47, 90, 176, 347, 689]
    with pytest.raises(ValueError):
        jn_order_exponent(0)


@pytest.mark.parametrize("a", TESTED + [Alphabet(3, 2), Alphabet(1, 4)], ids=str)
def test_enumeration(a):
    for n in range(1, 7):
        elems = list(enumerate_jn(a, n))
        assert len(elems) == 1 << jn_order_exponent(n)
        assert len(set(elems)) == len(elems)
        if n <= 5:
            assert all(is_member(a, g) for g in elems)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_jn(Alphabet(1, 2), 7))


def _children_psi(a, g):
    return psi(a, g.left).value, psi(a, g.right).value


@pytest.mark.parametrize("a", TESTED, ids=str)
def test_child_congruence(a):
    s = a.p + a.q
    for n in range(2, 7):
        k = (n - 1) // 2
        for g in enumerate_jn(a, n):
            pl, pr = _children_psi(a, g)
            assert (psi(a, g).value - (pl + pr) * pow(s, -1, 1 << k)) % (1 << k) == 0


@pytest.mark.parametrize("a", TESTED, ids=str)
def test_parity_bridge(a):
    for n in range(3, 7):
        for g in enumerate_jn(a, n):
            pl, pr = _children_psi(a, g)
            assert (psi(a, g).value - pl - pr) % 2 == 0


@pytest.mark.parametrize("a", TESTED, ids=str)
@pytest.mark.parametrize("n", [4, 6])
def test_even_depth_relation(a, n):
    p, q = a.p, a.q
    mod = 1 << ((n - 2) // 2)
    for g in enumerate_jn(a, n):
        L, R = g.left, g.right
        assert L.flip == R.flip
        ll, lr = psi(a, L.left).value, psi(a, L.right).value
        rl, rr = psi(a, R.left).value, psi(a, R.right).value
        assert (ll - lr - (rr - rl + L.flip * (p + q) * (p - q))) % mod == 0


@pytest.mark.parametrize("a", TESTED, ids=str)
def test_delta_surjective(a):
    for n in range(1, 7):
        image = {delta(a, g) for g in enumerate_jn(a, n)}
        assert len(image) == 2 << (n // 2)


def test_letter_order_does_not_change_size():
    # letter order only changes the bit encoding, not the group size
    for n in range(1, 6):
        assert len(list(enumerate_jn(Alphabet(3, 2), n))) == len(list(enumerate_jn(Alphabet(2, 3), n)))
