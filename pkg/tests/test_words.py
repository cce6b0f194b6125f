import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_hnn.words import (
    abelianize,
    alternating,
    commutator,
    concat,
    cyclic_key,
    cyclic_reduce,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    power,
    substitute,
    word,
)

letters = st.tuples(st.sampled_from(["a", "b", "c"]), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=12).map(tuple)


def test_parse_and_format():
    w = parse_word("a b^-1 t@2")
    assert w == (("a", 1), ("b", -1), ("t@2", 1))
    assert format_word(w) == "a b^-1 t@2"
    assert parse_word("") == ()


def test_parse_rejects_bad_exponent():
    with pytest.raises(ValueError):
        parse_word("a^2")


def test_free_reduce_and_inverse():
    assert free_reduce(word("a", "b", "b^-1", "a^-1", "c")) == word("c")
    assert inverse(word("a", "b^-1")) == word("b", "a^-1")


def test_alternating_and_power():
    assert alternating("a", "b", 3) == word("a", "b", "a")
    assert power(word("a"), -2) == word("a^-1", "a^-1")
    assert commutator(word("a"), word("b")) == word("a", "b", "a^-1", "b^-1")


def test_cyclic_forms():
    assert cyclic_reduce(word("a", "b", "a^-1")) == word("b")
    assert cyclic_key(word("b", "a")) == cyclic_key(word("a", "b")) == cyclic_key(word("b^-1", "a^-1"))


def test_substitute():
    assert substitute(word("a", "b^-1"), {"a": word("x", "y"), "b": word("y")}) == word("x")


@settings(max_examples=200, deadline=None)
@given(words, words)
def test_group_laws(u, v):
    assert free_reduce(concat(u, inverse(u))) == ()
    assert concat(u, v) == free_reduce(u + v)
    assert free_reduce(free_reduce(u)) == free_reduce(u)
    assert parse_word(format_word(u)) == u
    ab = abelianize(concat(u, v))
    for g in "abc":
        assert ab.get(g, 0) == abelianize(u).get(g, 0) + abelianize(v).get(g, 0)


@settings(max_examples=200, deadline=None)
@given(words, st.integers(0, 20))
def test_cyclic_key_is_conjugation_invariant(u, n):
    r = free_reduce(u)
    if r:
        n %= len(r)
        rotated = r[n:] + r[:n]
        assert cyclic_key(rotated) == cyclic_key(r) == cyclic_key(inverse(r))
    x = (random.Random(n).choice("abc"), 1)
    assert cyclic_key(concat((x,), u, ((x[0], -1),))) == cyclic_key(u)
