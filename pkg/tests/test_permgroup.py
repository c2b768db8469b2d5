import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import count_inversions, has_321
from pierimonoid.permgroup import (
    IntegerPermutation as P, PatternError, PermutationError, all_permutations, is_321_avoiding, length,
    reduced_word, up_set,
)


def test_group_basics():
    s1 = P.simple(1)
    assert (s1 * s1).is_identity()
    zeta = P.from_window([3, 6, 2, 5, 4, 1])
    w, u = P.from_window([3, 5, 6, 1, 2, 4]), P.from_window([1, 4, 2, 6, 3, 5])
    assert w * u.inverse() == zeta


def test_parse_and_print():
    p = P.parse("1,4,2,6,3,5")
    assert p.one_line(6) == (1, 4, 2, 6, 3, 5)
    assert p.to_string() == "1,4,2,6,3,5"
    assert P.parse("") == P.identity()
    with pytest.raises(PermutationError):
        P.parse("1,1,2")
    with pytest.raises(PermutationError):
        P.parse("1,x")
    with pytest.raises(PermutationError):
        P({1: 2})


def test_length():
    assert length(P.identity()) == 0
    for r in (-3, 0, 5):
        assert length(P.simple(r)) == 1
    assert length(P.from_window([3, 2, 1])) == 3


def test_reduced_word_examples():
    assert reduced_word(P.identity()) == ()
    assert reduced_word(P.simple(0)) == (0,)
    w = reduced_word(P.from_window([3, 2, 1]))
    assert w in ((1, 2, 1), (2, 1, 2))
    assert P.from_word(w) == P.from_window([3, 2, 1])


def test_321():
    assert is_321_avoiding(P.identity())
    assert not is_321_avoiding(P.from_window([3, 2, 1]))
    assert P.from_window([3, 2, 1]).pattern_321() == (1, 2, 3)
    v = P(dict(zip(range(-4, 7), (-4, -3, -2, 1, -1, 2, 3, 0, 4, 5, 6))))
    assert is_321_avoiding(v)
    assert issubclass(PatternError, PermutationError)


def test_up_set():
    assert up_set(P.from_window([3, 6, 2, 5, 4, 1])) == {3, 5, 6}
    assert up_set(P.identity()) == frozenset()
    assert up_set(P.transposition(2, 7)) == {7}


def test_cycles():
    assert P.from_cycle([3, 2, 1]).cycles() == [(3, 2, 1)]
    assert P.from_window([2, 1, 4, 3]).cycles() == [(4, 3), (2, 1)]


@pytest.mark.parametrize("n", range(1, 7))
def test_reduced_words_exhaustive(n):
    for p in all_permutations(1, n):
        word = reduced_word(p)
        assert P.from_word(word) == p
        assert len(word) == length(p) == count_inversions(p.one_line(n))


def test_321_exhaustive_s7():
    for p in all_permutations(1, 7):
        assert is_321_avoiding(p) == (not has_321(p.one_line(7)))


finite_support = st.integers(-6, 6).flatmap(
    lambda lo: st.permutations(list(range(lo, lo + 7))).map(lambda im, lo=lo: P.from_window(im, lo)))


@settings(max_examples=500, deadline=None)
@given(finite_support)
def test_reduced_word_random(p):
    word = reduced_word(p)
    assert P.from_word(word) == p
    assert len(word) == length(p)


@settings(max_examples=300, deadline=None)
@given(finite_support, st.integers(-7, 13))
def test_length_changes_by_one(p, r):
    assert abs(length(p * P.simple(r)) - length(p)) == 1


@settings(max_examples=200, deadline=None)
@given(finite_support, finite_support)
def test_inverse_and_associativity(p, q):
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert length(p.inverse()) == length(p)
    for i in range(-8, 14):
        assert (p * q)(i) == p(q(i))
