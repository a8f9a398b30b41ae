import json
import random

import pytest

from demhop.cayley import build_table
from demhop.demazure import demazure_oracle
from demhop.errors import InvalidWindowError
from demhop.hopping import apply_to_list, hop_signed
from demhop.parabolic import (
    QFactor, candidates, classify_q, decompose_d, l_list, q_star, realize_q, t_list,
)
from demhop.perm import eval_word, identity
from demhop.signed import compose_signed, generator, unfold

W = (2, -4, -1, 5, 3)


class TestRightActions:
    def test_form1_cycles_positions(self):
        q = QFactor(2, 1, 4)
        assert q.word(5) == (2, 3, 4)
        assert compose_signed(W, q.window(5)) == (2, -1, 5, 3, -4)

    def test_form2(self):
        q = QFactor(2, 2, 4)
        assert q.word(5) == (2, 3, 5, 4)
        assert compose_signed(W, q.window(5)) == (2, -1, 5, 4, -3)

    def test_form3(self):
        q = QFactor(2, 3)
        assert q.word(5) == (2, 3, 5)
        assert compose_signed(W, q.window(5)) == (2, -1, 5, -3, 4)

    def test_realize(self):
        window, word = realize_q(QFactor(2, 3), 5)
        assert eval_word("D", 5, word) == window


class TestDecomposition:
    def test_worked_example(self):
        d = decompose_d(W)
        assert [(q.level, q.form, q.j) for q in d.factors] == [(4, 2, None), (3, 3, None), (2, 0, None), (1, 2, 3)]
        assert d.factor(4).window(5) == eval_word("D", 5, (4, 5))
        assert d.factor(3).word(5) == (3, 5)
        assert d.factor(1).window(5) == eval_word("D", 5, (1, 2, 3, 4, 5, 3))
        assert eval_word("D", 5, d.word()) == W

    def test_identity(self):
        d = decompose_d(identity(4))
        assert all(q.form == 0 for q in d.factors)

    def test_json(self):
        rows = json.loads(decompose_d(W).to_json())
        assert [r["level"] for r in rows] == [4, 3, 2, 1]
        assert rows[3] == {"level": 1, "form": 2, "j": 3, "word": [1, 2, 3, 5, 4, 3], "window": [2, 3, -1, 4, -5]}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_recomposition_exhaustive(self, n):
        for w in build_table("D", n).elements:
            d = decompose_d(w)
            assert eval_word("D", n, d.word()) == w
            assert [q.level for q in d.factors] == list(range(n - 1, 0, -1))
            for k in range(1, n - 1):
                rest = d.partial(k + 1)
                lower = _product_low(d, k, n)
                assert compose_signed(rest, lower) == w
                # stripping Q_1..Q_k leaves an element fixing 1..k
                assert rest[:k] == tuple(range(1, k + 1))

    def test_candidate_counts(self):
        assert len(candidates(1, 5)) == 10
        assert len(candidates(4, 5)) == 4
        with pytest.raises(InvalidWindowError):
            candidates(5, 5)

    def test_uniqueness_exhaustive_d4(self):
        n = 4
        for w in build_table("D", n).elements:
            residual = w
            for level in range(1, n - 1):
                fits = [q for q in candidates(level, n)
                        if compose_signed(residual, _inverse(q.window(n)))[level - 1] == level]
                assert len(fits) == 1
                residual = compose_signed(residual, _inverse(fits[0].window(n)))

    def test_classify(self):
        assert classify_q((1, 2, 3, 4, 5, 3), 5, is_word=True) == QFactor(1, 2, 3)
        assert classify_q((1, 2, 3, 5, 4, 3), 5, is_word=True) == QFactor(1, 2, 3)
        with pytest.raises(InvalidWindowError):
            classify_q(identity(5), 5)

    def test_malformed(self):
        with pytest.raises(InvalidWindowError):
            QFactor(1, 1).word(5)
        with pytest.raises(InvalidWindowError):
            QFactor(4, 1, 4).word(5)


def _inverse(w):
    from demhop.signed import inverse_signed
    return inverse_signed(w)


def _product_low(d, k, n):
    out = identity(n)
    for level in range(k, 0, -1):
        out = compose_signed(out, d.factor(level).window(n))
    return out


class TestLists:
    def test_l_table(self):
        n = 5
        assert l_list(QFactor(1, 2, 3), n) == (2, 3, 4, 5, -5, -4)
        assert l_list(QFactor(1, 1, 3), n) == (2, 3, 4)
        assert l_list(QFactor(2, 3), n) == (3, 4, -5)
        assert l_list(QFactor(4, 2), n) == (5, -5)
        assert l_list(QFactor(4, 3), n) == (-5,)
        assert l_list(QFactor(4, 1), n) == (5,)
        assert l_list(QFactor(3, 0), n) == ()

    def test_level_top_lift_differs_from_l(self):
        n = 5
        q = QFactor(4, 2)
        from demhop.hopping import lift_d
        assert lift_d(q.window(n), 4) == (-5, 5)
        assert l_list(q, n) == (5, -5)

    def test_t_table(self):
        assert t_list(QFactor(1, 1, 3), 5) == (1, 2, 3)
        assert t_list(QFactor(2, 3), 5) == (2, 3, 4)
        with pytest.raises(InvalidWindowError):
            t_list(QFactor(4, 2), 5)
        with pytest.raises(InvalidWindowError):
            t_list(QFactor(2, 0), 5)

    def test_worked_list_transport(self):
        d = decompose_d(W)
        L1 = l_list(d.factor(1), 5)
        transported = apply_to_list(d.partial(2), L1)
        assert transported == (2, -4, 5, -3, 3, -5)
        from demhop.hopping import hoplists_equivalent, lift_d
        assert hoplists_equivalent(1, transported, lift_d(W, 1), 5)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_t_is_preimage_of_l(self, n):
        for level in range(1, n - 1):
            for q in candidates(level, n):
                if q.form == 0:
                    continue
                assert apply_to_list(q.window(n), t_list(q, n)) == l_list(q, n)

    def test_t_identity_exhaustive_d4(self):
        n = 4
        for w in build_table("D", n).elements:
            d = decompose_d(w)
            for i in range(1, n - 1):
                q = d.factor(i)
                if q.form:
                    assert apply_to_list(d.partial(i + 1), l_list(q, n)) == apply_to_list(d.partial(i), t_list(q, n))


class TestQStar:
    def test_worked(self):
        q = classify_q((1, 2, 3, 5), 5, is_word=True)
        assert q == QFactor(1, 3)
        assert q_star(q, W) == (3, -1, -2, 5, 4)
        assert hop_signed(compose_signed(q.window(5), W), 1, [2, 3, 4, -5]) == (3, -1, -2, 5, 4)

    def test_form0(self):
        assert q_star(QFactor(2, 0), W) == W

    def test_all_candidates_d4(self):
        n = 4
        for level in range(1, n):
            for q in candidates(level, n):
                for w in build_table("D", n).elements:
                    assert q_star(q, w) == demazure_oracle("D", q.window(n), w)


def _pattern(w, n):
    """Relative order of ±(n-1), ±n in the unfolding, written symbolically."""
    names = {n - 1: "n-1", n: "n", -(n - 1): "-(n-1)", -n: "-n"}
    return tuple(names[x] for x in unfold(w) if abs(x) >= n - 1)


# row 1 of the printed table reads "-n, -(n-1), n-1, -n"; the value repeats
# -n, and the computed pattern is the antisymmetric one below
FRINGE_TABLE = {
    ("n-1", "n", "-n", "-(n-1)"): ("-n", "-(n-1)", "n-1", "n"),
    ("n", "n-1", "-(n-1)", "-n"): ("-(n-1)", "-n", "n", "n-1"),
    ("-(n-1)", "n", "-n", "n-1"): ("-(n-1)", "n", "-n", "n-1"),
    ("n", "-(n-1)", "n-1", "-n"): ("-(n-1)", "n", "-n", "n-1"),
    ("n-1", "-n", "n", "-(n-1)"): ("-n", "n-1", "-(n-1)", "n"),
    ("-n", "n-1", "-(n-1)", "n"): ("-n", "n-1", "-(n-1)", "n"),
    ("-(n-1)", "-n", "n", "n-1"): ("-(n-1)", "-n", "n", "n-1"),
    ("-n", "-(n-1)", "n-1", "n"): ("-n", "-(n-1)", "n-1", "n"),
}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fringe_case_table(n):
    s = generator("D", n, n)
    seen = {}
    elems = build_table("D", n).elements
    if len(elems) > 400:
        elems = random.Random(0).sample(elems, 400)
    for w in elems:
        star = demazure_oracle("D", s, w)
        hop = hop_signed(compose_signed(s, w), n - 1, [-n])
        assert star == hop
        chi = _pattern(w, n)
        assert seen.setdefault(chi, _pattern(star, n)) == _pattern(star, n)
    assert seen == FRINGE_TABLE
