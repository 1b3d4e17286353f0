from itertools import product

import pytest
from hypothesis import given, strategies as st

from schubtorus.errors import IndexOutOfRange, Malformed, NotABijection, SizeMismatch
from schubtorus.perm import (Permutation, all_permutations, bruhat_leq, descent_set, direct_sum,
                             hat_w, identity, is_irreducible, length, longest, parse_permutation,
                             rank, reduced_word, reflect, simple_reflection,
                             simple_reflections_below, subword_bruhat_leq, transposition,
                             transposition_apply, w0_star_w0, word_product)

from conftest import P

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda xs: Permutation(tuple(xs)))


# --- parsing -----------------------------------------------------------------

def test_parse_digit_string():
    assert P("3412").images == (3, 4, 1, 2)
    assert P("1") == identity(1)


def test_parse_bracketed_list():
    w = P("[10,1,2,3,4,5,6,7,8,9]")
    assert w.n == 10 and w(1) == 10
    assert str(w) == "[10,1,2,3,4,5,6,7,8,9]"
    assert P(" [3, 4, 1, 2] ") == P("3412")


@pytest.mark.parametrize("text", ["", "[]", "34a2", "[1,,2]", "3 4", "[1;2]", "٣"])
def test_parse_malformed(text):
    with pytest.raises(Malformed):
        parse_permutation(text)


@pytest.mark.parametrize("text", ["3413", "0123", "[1,2,4]", "22"])
def test_parse_not_bijection(text):
    with pytest.raises(NotABijection):
        parse_permutation(text)


@given(perms)
def test_str_round_trip(w):
    assert parse_permutation(str(w)) == w


# --- group structure -----------------------------------------------------------

@given(perms)
def test_inverse(w):
    assert w.inverse().inverse() == w
    assert w * w.inverse() == identity(w.n)


def test_composition_is_right_to_left():
    # s_2 s_1 s_3 s_2 = 3412
    s = lambda i: simple_reflection(i, 4)
    assert s(2) * s(1) * s(3) * s(2) == P("3412")
    # left multiplication by s_i swaps values, right multiplication swaps positions
    assert s(1) * P("2314") == P("1324")
    assert P("2314") * s(1) == P("3214")


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        P("12") * P("123")
    with pytest.raises(SizeMismatch):
        bruhat_leq(P("12"), P("123"))


# --- length and rank ---------------------------------------------------------------

def test_length_examples():
    assert length(P("3412")) == 4
    assert length(P("245163")) == 6
    assert length(identity(5)) == 0
    assert length(longest(5)) == 10


def test_rank_examples():
    w = P("3412")
    assert rank(w, 4, 1) == 0
    assert rank(w, 2, 3) == 2
    assert [rank(identity(4), 1, b) for b in range(1, 5)] == [1, 2, 3, 4]
    with pytest.raises(IndexOutOfRange):
        rank(w, 0, 1)
    with pytest.raises(IndexOutOfRange):
        rank(w, 1, 5)


# --- Bruhat order --------------------------------------------------------------------

def test_bruhat_examples():
    w = P("3412")
    assert all(bruhat_leq(identity(4), u) for u in all_permutations(4))
    assert bruhat_leq(P("1324"), w)
    assert not bruhat_leq(w, P("1324"))


def test_bruhat_matches_subword_s4():
    ps = list(all_permutations(4))
    for v, w in product(ps, ps):
        assert bruhat_leq(v, w) == subword_bruhat_leq(v, w), (v, w)


def test_subword_examples():
    s2 = simple_reflection(2, 4)
    assert subword_bruhat_leq(s2, word_product((2, 1, 3, 2), 4))
    assert subword_bruhat_leq(P("2413"), P("2413"))
    assert not subword_bruhat_leq(P("3412"), P("4132"))


def test_comparable_pair_counts():
    # frozen from the double loop; the small cases are easy to count by hand
    counts = []
    for n in range(1, 6):
        ps = list(all_permutations(n))
        counts.append(sum(bruhat_leq(v, w) for v in ps for w in ps))
    assert counts == [1, 3, 19, 213, 3781]


@given(perms, st.data())
def test_bruhat_partial_order(w, data):
    n = w.n
    v = data.draw(perms.filter(lambda p: p.n == n)) if n > 1 else w
    assert bruhat_leq(w, w)
    if bruhat_leq(v, w) and bruhat_leq(w, v):
        assert v == w
    if bruhat_leq(v, w):
        assert length(v) <= length(w)


# --- transpositions and reduced words ------------------------------------------------

def test_transposition_apply():
    assert transposition_apply(2, 3, identity(4)) == P("1324")
    r = transposition_apply(1, 3, P("1324"))
    # 3124 has inversions (3,1), (3,2); 1324 has one
    assert r == P("3124") and length(r) - length(P("1324")) == 1
    with pytest.raises(IndexOutOfRange):
        transposition_apply(3, 2, identity(4))
    with pytest.raises(IndexOutOfRange):
        transposition_apply(1, 5, identity(4))


@given(perms, st.data())
def test_transposition_changes_length_by_odd(v, data):
    if v.n < 2:
        return
    a = data.draw(st.integers(1, v.n - 1))
    b = data.draw(st.integers(a + 1, v.n))
    t = transposition_apply(a, b, v)
    assert (length(t) - length(v)) % 2 == 1
    assert t == transposition(a, b, v.n) * v


def test_reduced_word_examples():
    assert reduced_word(P("3412")) == (2, 1, 3, 2)
    assert reduced_word(identity(5)) == ()
    word = reduced_word(P("245163"))
    assert word == (1, 3, 2, 4, 3, 5)
    assert set(word) == {1, 2, 3, 4, 5} and len(word) == 6


def test_reduced_words_s6():
    for w in all_permutations(6):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert word_product(word, 6) == w


# --- simple reflections, descents, irreducibility ------------------------------------------

def test_simple_reflections_below_examples():
    assert simple_reflections_below(P("245163")) == {1, 2, 3, 4, 5}
    assert simple_reflections_below(identity(4)) == frozenset()
    assert simple_reflections_below(P("3412")) == {1, 2, 3}


def test_simple_reflections_below_matches_bruhat_s6():
    for w in all_permutations(6):
        below = {i for i in range(1, 6) if bruhat_leq(simple_reflection(i, 6), w)}
        assert simple_reflections_below(w) == below


def test_irreducible_iff_all_simple_reflections_s5():
    for w in all_permutations(5):
        assert is_irreducible(w) == (simple_reflections_below(w) == set(range(1, 5)))


def test_irreducible_examples():
    assert is_irreducible(P("245163"))
    assert not is_irreducible(identity(3))
    assert is_irreducible(identity(1))


def test_descent_set():
    assert descent_set(P("3412")) == {2}
    assert descent_set(P("245163")) == {3, 5}


# --- constructions -----------------------------------------------------------------------

def test_direct_sum():
    assert direct_sum(P("3412"), P("3412")) == P("34127856")
    for a in all_permutations(3):
        for b in all_permutations(3):
            assert length(direct_sum(a, b)) == length(a) + length(b)


def test_star_and_hat():
    assert w0_star_w0(2) == P("2143")
    assert w0_star_w0(3) == P("321654")
    assert hat_w(P("12")) == P("4321")
    # first n values are 2n + 1 - w(i)
    assert hat_w(P("231")).images[:3] == (5, 4, 6)
    assert reflect(P("3412")) == P("2143")
