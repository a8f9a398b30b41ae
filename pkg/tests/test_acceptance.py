"""
Acceptance criteria.  Each test is tagged with its criterion; the terminal
summary prints one PASS/FAIL line per criterion (see conftest.py).
"""

import time

import pytest

from demhop.cayley import build_table, group_order
from demhop.demazure import demazure_hop_a, demazure_hop_b, demazure_hop_d, hop_chain
from demhop.demazure import unfold_star_fold_d_counterexample
from demhop.hopping import hop_a, hop_signed, lift_d
from demhop.parabolic import decompose_d
from demhop.perm import compose_a, eval_word, identity, length_a
from demhop.signed import compose_signed, gen_action_d, generator, is_even, normalize, unfold
from demhop.verify import run_suite

C1 = "C1 golden examples"
C2 = "C2 exhaustive theorem sweeps"
C3 = "C3 lemma suites"
C4 = "C4 interval product and subword property"
C5 = "C5 structural invariants"
C6 = "C6 negative control (type-D unfolding route)"


def _chain(family, w, v):
    start, steps = hop_chain(family, w, v)
    return start, [trace.result for _, _, trace in steps]


@pytest.mark.criterion(C1)
def test_golden_examples(criterion):
    t0 = time.perf_counter()
    # type A
    assert hop_a((8, 9, 1, 7, 2, 6, 4, 3, 5), 1, [2, 3, 4, 5, 6, 7, 8]) == (8, 9, 7, 6, 2, 5, 4, 3, 1)
    w, v = (6, 5, 4, 1, 7, 2, 3), (5, 4, 3, 6, 2, 1, 7)
    assert demazure_hop_a(w, v) == (7, 6, 5, 4, 2, 1, 3)
    start, results = _chain("A", w, v)
    assert start == (7, 1, 4, 2, 5, 6, 3)
    assert results[:5] == [
        (7, 4, 5, 2, 6, 1, 3), (7, 4, 5, 6, 2, 1, 3), (7, 4, 5, 6, 2, 1, 3),
        (7, 5, 6, 4, 2, 1, 3), (7, 6, 5, 4, 2, 1, 3),
    ]
    # type B
    assert hop_signed((-4, 5, 3, -1, -2, -6), 1, [-3, 4, -5, 6]) == (-1, -4, 3, 5, -2, -6)
    w, v = (-5, 3, 1, -2, 4), (-4, 2, -1, -3, 5)
    assert demazure_hop_b(w, v) == (-2, -5, -1, -3, -4)
    start, results = _chain("B", w, v)
    assert start == (2, 3, 5, -1, 4)
    assert results == [
        (2, 3, -1, 5, 4), (-2, 3, -1, 5, -4), (-2, -5, -1, -3, -4),
        (-2, -5, -1, -3, -4), (-2, -5, -1, -3, -4),
    ]
    assert unfold(results[1]) == (-2, 3, -1, 5, -4, 4, -5, 1, -3, 2)
    # type D one-line conventions
    assert eval_word("D", 5, (1, 2, 1, 3, 5, 3, 2)) == (3, -5, 2, 4, -1)
    x = (1, 2, -3, 4, -5)
    assert [gen_action_d(x, 3, "left"), gen_action_d(x, 3, "right"),
            gen_action_d(x, 5, "left"), gen_action_d(x, 5, "right")] == [
        (1, 2, -4, 3, -5), (1, 2, 4, -3, -5), (1, 2, -3, -5, 4), (1, 2, -3, 5, -4)]
    w = (2, -4, -1, 5, 3)
    for word, expected in [((2, 3, 4), (2, -1, 5, 3, -4)), ((2, 3, 5, 4), (2, -1, 5, 4, -3)),
                           ((2, 3, 5), (2, -1, 5, -3, 4))]:
        assert compose_signed(w, eval_word("D", 5, word)) == expected
    d = decompose_d(w)
    assert [q.window(5) for q in d.factors] == [
        eval_word("D", 5, word) for word in [(4, 5), (3, 5), (), (1, 2, 3, 4, 5, 3)]]
    assert (lift_d(w, 4), lift_d(w, 3), lift_d(w, 1)) == ((5, -5), (-4, 5), (2, -4, 5, 3, -3, -5))
    # swapping j and -j when they are not adjacent changes the result
    a = hop_signed(identity(5), 2, [4, -1, -4])
    b = hop_signed(identity(5), 2, [-4, -1, 4])
    assert a != b and {a, b} == {(-2, 4, 3, -1, 5), (-2, -4, 3, 1, 5)}
    # type-D counterexample to the unfolding route
    ex = unfold_star_fold_d_counterexample()
    assert (ex.unfolded_product, ex.folded, ex.folded_parity, ex.true_product) == (
        (7, 8, 4, 6, 3, 5, 1, 2), (-2, -1, 4, -3), "odd", (-2, -1, 4, 3))
    # final type-D product and chain
    w, v = (2, -4, -1, 5, 3), (-4, 3, -5, -1, -2)
    assert demazure_hop_d(w, v) == (-1, -3, -4, -2, 5)
    start, results = _chain("D", w, v)
    assert start == (-5, -1, -3, -2, 4)
    assert results == [(-1, -5, -3, -2, 4), (-1, -5, -3, -2, 4), (-1, -3, -5, -2, 4), (-1, -3, -4, -2, 5)]
    elapsed = time.perf_counter() - t0
    criterion.append(f"runtime {elapsed:.3f} s")
    assert elapsed < 1.0


@pytest.mark.criterion(C1)
@pytest.mark.xfail(strict=True, reason=(
    "the printed values of the two list-order illustrations follow an earliest-in-list "
    "tie-break, which contradicts the type-A, type-B and main type-D worked examples"))
def test_golden_list_order_illustrations_as_printed():
    w = (2, -4, -1, 5, 3)
    assert hop_signed(w, 1, [3, 2, -2, 4]) == hop_signed(w, 1, [3, -2, 2, 4]) == (-1, -4, 2, 5, 3)
    assert hop_signed(identity(5), 2, [4, -1, -4]) == (-2, 4, 3, -1, 5)
    assert hop_signed(identity(5), 2, [-4, -1, 4]) == (-2, -4, 3, 1, 5)


@pytest.mark.criterion(C2)
def test_exhaustive_theorem_sweeps(criterion):
    t0 = time.perf_counter()
    sweeps = [
        ("main-theorem", "A", 4, 576), ("main-theorem", "A", 5, 14_400),
        ("main-theorem", "B", 3, 2_304), ("main-theorem", "B", 4, 147_456),
        ("fold-unfold-B", "B", 3, 2_304), ("fold-unfold-B", "B", 4, 147_456),
        ("main-theorem", "D", 3, 576), ("main-theorem", "D", 4, 36_864),
    ]
    failures = []
    for suite, family, n, pairs in sweeps:
        res = run_suite(suite, family, n)
        print(f"{suite} {family}_{n}: {res.summary()}")
        assert res.checked == pairs
        if not res.ok:
            failures.append(res.report())
    literal = run_suite("main-theorem-literal", "B", 3)
    criterion.append("type B hops with w↖i reordered so -i sits at the centre of the unfolding; "
                     f"plain unfolding order agrees on only {literal.summary()} in B_3")
    elapsed = time.perf_counter() - t0
    criterion.append(f"runtime {elapsed:.1f} s")
    assert not failures, "\n".join(failures)
    assert elapsed < 60


@pytest.mark.criterion(C3)
@pytest.mark.parametrize("suite", ["hopneg", "hopirrele", "hoptrans", "singletrans", "multtrans",
                                   "addDk", "allformhop", "hoppingtransfer"])
def test_lemma_suites(criterion, suite):
    res = run_suite(suite, "D", 4)
    print(f"{suite} D_4: {res.summary()}")
    assert res.ok, res.report()


@pytest.mark.criterion(C4)
@pytest.mark.parametrize("family,n,sample", [("D", 3, None), ("B", 3, 500), ("D", 4, 500)])
def test_interval_product(criterion, family, n, sample):
    res = run_suite("interval", family, n, sample=sample)
    pairs = 576 if sample is None else sample
    # pairs plus every word of length <= 6
    words = sum(len(list(build_table(family, n).generators)) ** k for k in range(7))
    assert res.checked == pairs + words
    print(f"interval {family}_{n}: {res.summary()}")
    assert res.ok, res.report()


@pytest.mark.criterion(C5)
def test_structural_invariants(criterion):
    tables = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(1, 5)] + [("D", n) for n in range(2, 6)]
    for family, n in tables:
        t = build_table(family, n)
        assert len(t) == group_order(family, n)
        for g in t.generators:
            assert (abs(t.length[t.left_mul[g - 1]] - t.length) == 1).all()
    s6 = build_table("A", 6)
    assert all(length_a(w) == s6.length[i] for i, w in enumerate(s6.elements))
    d4 = build_table("D", 4).elements
    assert all(is_even(demazure_hop_d(u, v)) for u in d4 for v in d4)
    for n in range(2, 7):
        assert length_a(normalize(unfold(generator("D", n, 1)))) == 2
        assert length_a(normalize(unfold(generator("D", n, n)))) == 4


@pytest.mark.criterion(C6)
def test_negative_control(criterion):
    ex = unfold_star_fold_d_counterexample()
    assert ex.folded != ex.true_product
    assert not ex.routes_agree
    assert ex.folded_parity == "odd"
    assert run_suite("typeDbad", "D", 4).ok
