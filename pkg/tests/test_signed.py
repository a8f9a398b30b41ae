import itertools
import random

import pytest
from hypothesis import given, strategies as st

from demhop.cayley import build_table
from demhop.errors import InvalidWindowError, MalformedUnfoldingError
from demhop.perm import compose_a, eval_word, identity, length_a
from demhop.signed import (
    check_even, cmp_pm, compose_signed, denormalize, fold, gen_action_b, gen_action_d,
    generator, inverse_signed, normalize, parity, pm_key, unfold,
)


def signed(n):
    return st.tuples(st.permutations(list(range(1, n + 1))), st.lists(st.booleans(), min_size=n, max_size=n)).map(
        lambda p: tuple(-x if neg else x for x, neg in zip(p[0], p[1]))
    )


def test_order_on_signed_values():
    assert cmp_pm(3, -5) == -1
    assert cmp_pm(-5, -3) == -1
    assert cmp_pm(2, 2) == 0
    n = 4
    order = sorted([1, 2, 3, 4, -1, -2, -3, -4], key=lambda x: pm_key(x, n))
    assert order == [1, 2, 3, 4, -4, -3, -2, -1]


def test_unfold_examples():
    assert unfold((4, -2, 3, -1)) == (4, -2, 3, -1, 1, -3, 2, -4)
    assert unfold((2, -4, -1, 5, 3)) == (2, -4, -1, 5, 3, -3, -5, 1, 4, -2)
    assert unfold((1, 2, 3)) == (1, 2, 3, -3, -2, -1)


def test_fold_examples():
    assert fold((4, -2, 3, -1, 1, -3, 2, -4)) == (4, -2, 3, -1)
    assert fold(denormalize((7, 8, 4, 6, 3, 5, 1, 2))) == (-2, -1, 4, -3)
    with pytest.raises(MalformedUnfoldingError):
        fold((1, 2, -1, -2))


def test_normalize_examples():
    assert normalize((4, -2, 3, -1, 1, -3, 2, -4)) == (4, 7, 3, 8, 1, 6, 2, 5)
    assert normalize(unfold((1, 4, -2, -3))) == (1, 4, 7, 6, 3, 2, 5, 8)
    assert normalize(unfold(identity(4))) == identity(8)


def test_compose_examples():
    assert compose_signed((2, -4, -1, 5, 3), (-4, 3, -5, -1, -2)) == (-5, -1, -3, -2, 4)
    assert compose_signed((-5, 3, 1, -2, 4), (-4, 2, -1, -3, 5)) == (2, 3, 5, -1, 4)
    w = (2, -1, 3)
    assert compose_signed(identity(3), w) == w


def test_d_generator_actions():
    w = (1, 2, -3, 4, -5)
    assert gen_action_d(w, 3, "left") == (1, 2, -4, 3, -5)
    assert gen_action_d(w, 3, "right") == (1, 2, 4, -3, -5)
    assert gen_action_d(w, 5, "left") == (1, 2, -3, -5, 4)
    assert gen_action_d(w, 5, "right") == (1, 2, -3, 5, -4)


def test_b_generator_actions():
    assert gen_action_b((1, 2, 3), 3, "right") == (1, 2, -3)
    assert gen_action_b((1, 3, 2), 3, "left") == (1, -3, 2)
    with pytest.raises(InvalidWindowError):
        gen_action_b((1, 2, 3), 4)


def test_d_word_evaluation():
    assert eval_word("D", 5, (1, 2, 1, 3, 5, 3, 2)) == (3, -5, 2, 4, -1)


def test_parity():
    assert parity((-2, -1, 4, -3)) == "odd"
    assert parity(identity(5)) == "even"
    assert parity((2, 5, -1, -4, -3)) == "odd"
    with pytest.raises(InvalidWindowError):
        check_even((-1, 2))


def test_unfolding_lengths_of_d_generators():
    for n in range(2, 7):
        assert length_a(normalize(unfold(generator("D", n, 1)))) == 2
        assert length_a(normalize(unfold(generator("D", n, n)))) == 4


def _as_perm(w):
    return normalize(unfold(w))


def test_unfold_is_an_embedding_b3():
    elems = build_table("B", 3).elements
    for u, v in itertools.product(elems, repeat=2):
        assert _as_perm(compose_signed(u, v)) == compose_a(_as_perm(u), _as_perm(v))


@pytest.mark.parametrize("family,n", [("B", 3), ("D", 4)])
def test_fold_unfold_roundtrip(family, n):
    assert all(fold(unfold(w)) == w for w in build_table(family, n).elements)


def test_b_action_matches_unfolded_double_swap():
    n = 4
    for w in build_table("B", n).elements:
        for i in range(1, n):
            u = list(normalize(unfold(w)))
            for a in (i, 2 * n - i):
                u = [a + 1 if x == a else a if x == a + 1 else x for x in u]
            assert gen_action_b(w, i) == fold(denormalize(u))


def test_d_actions_preserve_parity():
    n = 4
    for w in build_table("D", n).elements:
        for i in range(1, n + 1):
            for side in ("left", "right"):
                check_even(gen_action_d(w, i, side))


def test_reduced_word_of_b5_element():
    table = build_table("B", 5)
    w = (-5, 3, 1, -2, 4)
    word = table.reduced_word_of(w)
    x = identity(5)
    for letter in reversed(word):
        x = gen_action_b(x, letter, "left")
    assert x == w


@given(signed(5), st.integers(1, 5))
def test_left_right_via_inverse(w, i):
    fam_action = gen_action_b
    left = fam_action(w, i, "left")
    right_of_inverse = fam_action(inverse_signed(w), i, "right")
    assert left == inverse_signed(right_of_inverse)


@given(signed(5), st.integers(1, 5))
def test_d_left_right_via_inverse(w, i):
    if parity(w) == "odd":
        w = (-w[0],) + w[1:]
    assert gen_action_d(w, i, "left") == inverse_signed(gen_action_d(inverse_signed(w), i, "right"))


def test_generators_are_involutions():
    rng = random.Random(3)
    for family in ("B", "D"):
        elems = build_table(family, 4).elements
        for w in rng.sample(elems, 40):
            for i in range(1, 5):
                s = generator(family, 4, i)
                assert compose_signed(s, compose_signed(s, w)) == w
