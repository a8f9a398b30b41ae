"""
Identity suites checked against the Cayley-graph oracle.

Each suite returns a :class:`SuiteResult` holding the number of checks, the
number that held, and the first counterexample in full.

>>> r = run_suite("main-theorem", "D", 3)
>>> r.summary()
'576/576 pairs OK'
>>> run_suite("typeDbad", "D", 4).ok
True
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import kernels
from .cayley import build_table
from .demazure import (
    compose, demazure_hop, demazure_oracle, demazure_unfolded_b, hop_chain,
    interval_product_check, lower_interval, oracle_row, oracle_table, star_word,
    unfold_star_fold_d_counterexample,
)
from .errors import InvalidWindowError
from .hopping import apply_to_list, hoplists_equivalent, lift_b, lift_d
from .notation import format_window, format_word
from .parabolic import candidates, decompose_d, l_list, q_star
from .perm import eval_word
from .signed import compose_signed, gen_action_d, generator, is_even

__all__ = ["SuiteResult", "SUITES", "DEFAULT_SEED", "run_suite", "odd_intermediate_pairs"]

DEFAULT_SEED = 20240601
DEFAULT_LISTS = 50


@dataclass
class SuiteResult:
    suite: str
    family: str
    rank: int
    unit: str = "checks"
    checked: int = 0
    passed: int = 0
    counterexample: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed

    def check(self, holds: bool, context: Callable[[], dict[str, Any]] | None = None) -> bool:
        """Count one check; on the first failure record ``context()``."""
        self.checked += 1
        if holds:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = context() if context is not None else {}
        return holds

    def summary(self) -> str:
        status = "OK" if self.ok else "FAILED"
        return f"{self.passed}/{self.checked} {self.unit} {status}"

    def report(self) -> str:
        lines = [f"{self.suite} {self.family}_{self.rank}: {self.summary()}"]
        lines += [f"  note: {note}" for note in self.notes]
        if self.counterexample is not None:
            lines.append("  first counterexample:")
            for key, value in self.counterexample.items():
                text = str(value)
                if "\n" in text:
                    lines.append(f"    {key}:")
                    lines += [f"      {row}" for row in text.splitlines()]
                else:
                    lines.append(f"    {key}: {text}")
        return "\n".join(lines)


def _fmt(x: Sequence[int]) -> str:
    return format_window(x)


def _signed_values(n: int) -> list[int]:
    return list(range(1, n + 1)) + [-k for k in range(1, n + 1)]


def _random_list(rng: random.Random, pool: Sequence[int]) -> list[int]:
    return rng.sample(list(pool), rng.randint(0, len(pool)))


def _pairs(family: str, n: int, sample: int | None, seed: int):
    """All pairs of the group, or ``sample`` seeded random pairs."""
    elems = oracle_table(family, n).elements
    if sample is None:
        for u in elems:
            yield u, elems
    else:
        rng = random.Random(seed)
        for _ in range(sample):
            yield rng.choice(elems), [rng.choice(elems)]


def _chain_text(family: str, w, v) -> str:
    start, steps = hop_chain(family, w, v)
    lines = [f"start {_fmt(start)}"]
    for i, L, trace in steps:
        lines.append(f"h_{{{i},{_fmt(L)}}} -> {_fmt(trace.result)}")
    return "\n".join(lines)


def _require(family: str, allowed: str, suite: str) -> None:
    if family not in allowed:
        raise InvalidWindowError(f"suite {suite!r} applies to families {', '.join(allowed)}, not {family}")


def main_theorem(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """The hopping product against the oracle; type-D outputs must also be even."""
    res = SuiteResult("main-theorem", family, n, unit="pairs")
    table = oracle_table(family, n)
    elems = table.elements
    for u, vs in _pairs(family, n, sample, seed):
        if sample is None:
            expected = [elems[k] for k in oracle_row(family, u)]
        else:
            expected = [demazure_oracle(family, u, v) for v in vs]
        for v, want in zip(vs, expected):
            got = demazure_hop(family, u, v)
            holds = got == want and (family != "D" or is_even(got))
            res.check(holds, lambda: {
                "left": _fmt(u), "right": _fmt(v), "hopping": _fmt(got),
                "oracle": _fmt(want), "trace": _chain_text(family, u, v),
            })
    return res


def main_theorem_literal_b(family: str, n: int, sample: int | None = None,
                           seed: int = DEFAULT_SEED) -> SuiteResult:
    """
    Type-B hopping with lifts kept in plain unfolding order.

    This reading is known to fail (e.g. 116 of 2304 pairs in B_3); the suite
    exists so the discrepancy stays measurable.
    """
    _require(family, "B", "main-theorem-literal")
    res = SuiteResult("main-theorem-literal", family, n, unit="pairs")
    for u, vs in _pairs(family, n, sample, seed):
        lifts = [lift_b(u, i) for i in range(1, n + 1)]
        for v in vs:
            x = compose_signed(u, v)
            for i, L in enumerate(lifts, 1):
                x = kernels.hop_signed(x, i, L)
            want = demazure_oracle(family, u, v)
            res.check(x == want, lambda: {
                "left": _fmt(u), "right": _fmt(v), "literal": _fmt(x), "oracle": _fmt(want),
                "lifts": " ".join(_fmt(L) for L in lifts),
            })
    return res


def fold_unfold_b(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    _require(family, "B", "fold-unfold-B")
    res = SuiteResult("fold-unfold-B", family, n, unit="pairs")
    elems = oracle_table(family, n).elements
    for u, vs in _pairs(family, n, sample, seed):
        expected = ([elems[k] for k in oracle_row(family, u)] if sample is None
                    else [demazure_oracle(family, u, v) for v in vs])
        for v, want in zip(vs, expected):
            got = demazure_unfolded_b(u, v)
            res.check(got == want, lambda: {
                "left": _fmt(u), "right": _fmt(v), "unfolded": _fmt(got), "oracle": _fmt(want),
            })
    return res


def hopneg(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Swapping an adjacent ``j, -j`` pair in the list never changes ``h_i`` (``i < j``)."""
    _require(family, "D", "hopneg")
    res = SuiteResult("hopneg", family, n)
    rng = random.Random(seed)
    elems = build_table("D", n).elements
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            pool = [x for x in _signed_values(n) if abs(x) != j]
            for _ in range(sample or DEFAULT_LISTS):
                sub = _random_list(rng, pool)
                cut = rng.randint(0, len(sub))
                L = sub[:cut] + [j, -j] + sub[cut:]
                L2 = sub[:cut] + [-j, j] + sub[cut:]
                for w in elems:
                    a, b = kernels.hop_signed(w, i, L), kernels.hop_signed(w, i, L2)
                    res.check(a == b, lambda: {
                        "w": _fmt(w), "i": i, "L": _fmt(L), "L'": _fmt(L2),
                        "h_L": _fmt(a), "h_L'": _fmt(b),
                    })
    return res


def hopirrele(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """``s_j h_{i,L}(s_j w) = h_{i,s_j(L)}(w)`` for ``i <= n-2`` and ``j > i``."""
    _require(family, "D", "hopirrele")
    res = SuiteResult("hopirrele", family, n)
    rng = random.Random(seed)
    elems = build_table("D", n).elements
    for i in range(1, n - 1):
        for j in range(i + 1, n + 1):
            s = generator("D", n, j)
            for _ in range(sample or DEFAULT_LISTS):
                L = _random_list(rng, _signed_values(n))
                sL = apply_to_list(s, L)
                for w in elems:
                    lhs = gen_action_d(kernels.hop_signed(gen_action_d(w, j), i, L), j)
                    rhs = kernels.hop_signed(w, i, sL)
                    res.check(lhs == rhs, lambda: {
                        "w": _fmt(w), "i": i, "j": j, "L": _fmt(L), "lhs": _fmt(lhs), "rhs": _fmt(rhs),
                    })
    return res


def hoptrans(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """
    Both transfer claims plus the mirror identity ``h_{j,[j+1]} = h_{-(j+1),[-j]}``.
    """
    _require(family, "D", "hoptrans")
    res = SuiteResult("hoptrans", family, n)
    rng = random.Random(seed)
    elems = build_table("D", n).elements
    values = _signed_values(n)
    for i in range(1, n):
        s = generator("D", n, i)
        pool = [x for x in values if x not in (i, i + 1)]
        for _ in range(sample or DEFAULT_LISTS):
            L = _random_list(rng, pool)
            sL = apply_to_list(s, L)
            for w in elems:
                lhs = gen_action_d(kernels.hop_signed(gen_action_d(w, i), i, L), i)
                rhs = kernels.hop_signed(w, i + 1, sL)
                res.check(lhs == rhs, lambda: {
                    "claim": "s_i h_{i,L}(s_i w) = h_{i+1,s_i(L)}(w)",
                    "w": _fmt(w), "i": i, "L": _fmt(L), "lhs": _fmt(lhs), "rhs": _fmt(rhs),
                })
    pool = [x for x in values if abs(x) not in (n - 1, n)]
    for _ in range(sample or DEFAULT_LISTS):
        L = _random_list(rng, pool)
        for w in elems:
            lhs = gen_action_d(kernels.hop_signed(gen_action_d(w, n), -(n - 1), L), n)
            rhs = kernels.hop_signed(w, n, L)
            res.check(lhs == rhs, lambda: {
                "claim": "s_n h_{-(n-1),L}(s_n w) = h_{n,L}(w)",
                "w": _fmt(w), "L": _fmt(L), "lhs": _fmt(lhs), "rhs": _fmt(rhs),
            })
    for j in range(1, n):
        for w in elems:
            a = kernels.hop_signed(w, j, [j + 1])
            b = kernels.hop_signed(w, -(j + 1), [-j])
            res.check(a == b, lambda: {
                "claim": "h_{j,[j+1]} = h_{-(j+1),[-j]}", "w": _fmt(w), "j": j,
                "lhs": _fmt(a), "rhs": _fmt(b),
            })
    return res


def singletrans(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """``s_i ⋆ w = h_{i,[i+1]}(s_i w)`` and ``s_n ⋆ w = h_{n-1,[-n]}(s_n w)``."""
    _require(family, "D", "singletrans")
    res = SuiteResult("singletrans", family, n)
    elems = build_table("D", n).elements
    for i in range(1, n + 1):
        s = generator("D", n, i)
        t, L = (i, [i + 1]) if i < n else (n - 1, [-n])
        for w in elems:
            want = demazure_oracle("D", s, w)
            got = kernels.hop_signed(compose_signed(s, w), t, L)
            res.check(got == want, lambda: {
                "generator": f"s_{i}", "w": _fmt(w), "hopping": _fmt(got), "oracle": _fmt(want),
            })
    return res


def multtrans(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """
    ``(s_i..s_j) ⋆ h_{j+1,L}(w) = h_{i,[i+1..j+1, (s_i..s_j)(L)]}((s_i..s_j) w)``
    for lists avoiding ``±(i..j+1)``, together with the base case
    ``s_{n-1} s_n s_{n-2}..s_j ⋆ w = h_{n-1,[n,-n,-(n-2)..-j]}(s_{n-1} s_n s_{n-2}..s_j w)``.
    """
    _require(family, "D", "multtrans")
    res = SuiteResult("multtrans", family, n)
    rng = random.Random(seed)
    elems = build_table("D", n).elements
    for i in range(1, n):
        for j in range(i, n):
            word = tuple(range(i, j + 1))
            q = eval_word("D", n, word)
            band = set(range(i, j + 2))
            pool = [x for x in _signed_values(n) if abs(x) not in band]
            for _ in range(sample or DEFAULT_LISTS):
                L = _random_list(rng, pool)
                M = list(range(i + 1, j + 2)) + list(apply_to_list(q, L))
                for w in elems:
                    lhs = demazure_oracle("D", q, kernels.hop_signed(w, j + 1, L))
                    rhs = kernels.hop_signed(compose_signed(q, w), i, M)
                    res.check(lhs == rhs, lambda: {
                        "word": format_word(word), "w": _fmt(w), "L": _fmt(L),
                        "lhs": _fmt(lhs), "rhs": _fmt(rhs),
                    })
    for j in range(1, n):
        word = (n - 1, n) + tuple(range(n - 2, j - 1, -1))
        q = eval_word("D", n, word)
        L = [n, -n] + [-k for k in range(n - 2, j - 1, -1)]
        for w in elems:
            want = demazure_oracle("D", q, w)
            got = kernels.hop_signed(compose_signed(q, w), n - 1, L)
            res.check(got == want, lambda: {
                "word": format_word(word), "w": _fmt(w), "L": _fmt(L),
                "hopping": _fmt(got), "oracle": _fmt(want),
            })
    return res


def add_dk(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """``(Q_{n-1}..Q_{k+1})↖i ∼_i (Q_{n-1}..Q_k)↖i`` for ``k < i <= n-1``."""
    _require(family, "D", "addDk")
    res = SuiteResult("addDk", family, n)
    for w in build_table("D", n).elements:
        d = decompose_d(w)
        for i in range(2, n):
            for k in range(1, i):
                a, b = lift_d(d.partial(k + 1), i), lift_d(d.partial(k), i)
                res.check(hoplists_equivalent(i, a, b, n), lambda: {
                    "w": _fmt(w), "i": i, "k": k, "L": _fmt(a), "L'": _fmt(b),
                })
    return res


def allformhop(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """``(Q_{n-1}..Q_{i+1}) L_i ∼_i w↖i`` for every level, with ``L_{n-1} ∼_{n-1} w↖(n-1)``."""
    _require(family, "D", "allformhop")
    res = SuiteResult("allformhop", family, n)
    for w in build_table("D", n).elements:
        d = decompose_d(w)
        for i in range(1, n):
            q = d.factor(i)
            L = l_list(q, n) if i == n - 1 else apply_to_list(d.partial(i + 1), l_list(q, n))
            want = lift_d(w, i)
            res.check(hoplists_equivalent(i, L, want, n), lambda: {
                "w": _fmt(w), "level": i, "factor": q.describe(n), "L": _fmt(L), "w↖i": _fmt(want),
            })
    return res


def hoppingtransfer(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    """``Q_i ⋆ w = h_{i,L_i}(Q_i w)`` for every quotient representative."""
    _require(family, "D", "hoppingtransfer")
    res = SuiteResult("hoppingtransfer", family, n)
    elems = build_table("D", n).elements
    for level in range(1, n):
        for q in candidates(level, n):
            qw = q.window(n)
            for w in elems:
                got, want = q_star(q, w), demazure_oracle("D", qw, w)
                res.check(got == want, lambda: {
                    "factor": q.describe(n), "w": _fmt(w), "hopping": _fmt(got), "oracle": _fmt(want),
                })
    return res


def interval(family: str, n: int, sample: int | None = None, seed: int = DEFAULT_SEED,
             max_word: int = 6) -> SuiteResult:
    """
    ``[id, w⋆v]`` equals the product set of ``[id,w]`` and ``[id,v]``; and for
    every word of length ``<= max_word`` its evaluation lies below its
    star-fold, with equal lengths exactly for reduced words.
    """
    res = SuiteResult("interval", family, n)
    for u, vs in _pairs(family, n, sample, seed):
        for v in vs:
            res.check(interval_product_check(family, u, v), lambda: {
                "left": _fmt(u), "right": _fmt(v), "star": _fmt(demazure_oracle(family, u, v)),
            })
    table = oracle_table(family, n)
    gens = list(table.generators)
    if len(gens) ** max_word <= 50_000:
        for k in range(max_word + 1):
            for word in itertools.product(gens, repeat=k):
                x, star = eval_word(family, n, word), star_word(family, n, word)
                reduced = table.length_of(x) == k
                holds = (x in lower_interval(family, star)
                         and (table.length_of(star) == k) == reduced)
                res.check(holds, lambda: {
                    "word": format_word(word), "product": _fmt(x), "star": _fmt(star),
                })
    else:
        res.notes.append(f"word check skipped: {len(gens)}**{max_word} words is too many")
    return res


def type_d_bad(family: str = "D", n: int = 4, sample: int | None = None,
               seed: int = DEFAULT_SEED) -> SuiteResult:
    """The unfold, multiply, fold route must fail on the standard type-D pair."""
    res = SuiteResult("typeDbad", "D", 4)
    ex = unfold_star_fold_d_counterexample()
    ctx = lambda: {k: str(v) for k, v in vars(ex).items()}  # noqa: E731
    res.check(ex.unfolded_product == (7, 8, 4, 6, 3, 5, 1, 2), ctx)
    res.check(ex.folded == (-2, -1, 4, -3), ctx)
    res.check(ex.folded_parity == "odd", ctx)
    res.check(ex.true_product == (-2, -1, 4, 3), ctx)
    res.check(ex.true_product == demazure_oracle("D", ex.left, ex.right), ctx)
    res.check(not ex.routes_agree, ctx)
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "main-theorem": main_theorem,
    "main-theorem-literal": main_theorem_literal_b,
    "fold-unfold-B": fold_unfold_b,
    "hopneg": hopneg,
    "hopirrele": hopirrele,
    "hoptrans": hoptrans,
    "singletrans": singletrans,
    "multtrans": multtrans,
    "addDk": add_dk,
    "allformhop": allformhop,
    "hoppingtransfer": hoppingtransfer,
    "interval": interval,
    "typeDbad": type_d_bad,
}


def run_suite(name: str, family: str, n: int, sample: int | None = None,
              seed: int = DEFAULT_SEED) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise InvalidWindowError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(family, n, sample=sample, seed=seed)


def odd_intermediate_pairs(n: int) -> int:
    """Number of ``D_n`` pairs whose hopping chain passes through an odd-parity window."""
    elems = build_table("D", n).elements
    count = 0
    for u in elems:
        lifts = [lift_d(u, i) for i in range(1, n)]
        for v in elems:
            x = compose("D", u, v)
            for i, L in enumerate(lifts, 1):
                x = kernels.hop_signed(x, i, L)
                if not is_even(x):
                    count += 1
                    break
    return count
