"""
Demazure products for types A, B and D.

Two independent routes are provided.  The oracle folds a reduced word of
the left factor through the length table of the Cayley graph,
``s ⋆ x = x`` if ``s`` is a left descent of ``x`` and ``sx`` otherwise.
The hopping routes use only one-line notation:

    w ⋆ v = h_{top, w↖top} ... h_{1, w↖1}(wv)

with ``top = n-1`` for types A and D and ``top = n`` for type B.  In type B
the list ``w↖i`` is read with ``-i`` moved to the centre of the unfolding
(see :func:`demhop.hopping.lift_b_centered`).

>>> demazure_hop_a((6, 5, 4, 1, 7, 2, 3), (5, 4, 3, 6, 2, 1, 7))
(7, 6, 5, 4, 2, 1, 3)
>>> demazure_hop_d((1, 4, -2, -3), (4, -1, 2, -3))
(-2, -1, 4, 3)
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

import numpy as np

from . import kernels
from .cayley import GroupTable, build_table
from .errors import CapacityError, InvalidWindowError, RankMismatchError
from .hopping import hop_a_traced, hop_signed_traced, lift
from .notation import FAMILIES
from .perm import check_perm, compose_a, identity
from .signed import (
    check_even, check_signed, compose_signed, denormalize, fold, normalize, parity, unfold,
)

__all__ = [
    "Element", "Method", "ORACLE_MAX_RANK", "LOWER_INTERVAL_BOUND", "compose", "check_element",
    "oracle_table", "demazure_oracle", "oracle_row", "star_word", "demazure_hop_a",
    "demazure_hop_b", "demazure_hop_d", "demazure_hop", "demazure_unfolded_b",
    "hop_chain", "TypeDCounterexample", "unfold_star_fold_d_counterexample",
    "lower_interval", "interval_product_check", "product",
]

Method = Literal["hopping", "oracle", "unfolded", "plain"]

ORACLE_MAX_RANK = {"A": 8, "B": 5, "D": 5}
LOWER_INTERVAL_BOUND = 14


@dataclass(frozen=True)
class Element:
    """A group element tagged with its family, for uniform dispatch."""
    family: str
    window: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "window", check_element(self.family, self.window))

    @property
    def rank(self) -> int:
        return len(self.window)


def check_element(family: str, w: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    if family == "A":
        return check_perm(w, n)
    if family == "B":
        return check_signed(w, n)
    if family == "D":
        return check_even(w, n)
    raise InvalidWindowError(f"unknown family {family!r}")


def compose(family: str, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return compose_a(u, v) if family == "A" else compose_signed(u, v)


def _same_rank(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")


def oracle_table(family: str, n: int) -> GroupTable:
    if family not in FAMILIES:
        raise InvalidWindowError(f"unknown family {family!r}")
    if n > ORACLE_MAX_RANK[family]:
        raise CapacityError(
            f"oracle supports {family}_n up to n={ORACLE_MAX_RANK[family]}, got n={n}"
        )
    return build_table(family, n)


@lru_cache(maxsize=None)
def _lists(family: str, n: int) -> tuple[list, list]:
    t = oracle_table(family, n)
    return t.left_mul.tolist(), t.length.tolist()


def demazure_oracle(family: str, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """``u ⋆ v`` by folding a BFS reduced word of ``u`` onto ``v`` from the right."""
    _same_rank(u, v)
    table = oracle_table(family, len(u))
    left_mul, length = _lists(family, len(u))
    x = table.find(v)
    for g in reversed(table.reduced_word_of(u)):
        y = left_mul[g - 1][x]
        if length[y] > length[x]:
            x = y
    return table.elements[x]


def oracle_row(family: str, u: Sequence[int], word: Sequence[int] | None = None) -> np.ndarray:
    """
    Indices of ``u ⋆ v`` for every ``v`` of the table, vectorized over ``v``.

    ``word`` overrides the reduced word of ``u``; any reduced word gives the
    same row.
    """
    table = oracle_table(family, len(u))
    if word is None:
        word = table.reduced_word_of(u)
    x = np.arange(len(table))
    for g in reversed(word):
        y = table.left_mul[g - 1, x]
        x = np.where(table.length[y] > table.length[x], y, x)
    return x


def star_word(family: str, n: int, word: Sequence[int]) -> tuple[int, ...]:
    """``s_{a_1} ⋆ ... ⋆ s_{a_k}`` for an arbitrary (not necessarily reduced) word."""
    table = oracle_table(family, n)
    left_mul, length = _lists(family, n)
    x = 0
    for g in reversed(word):
        y = left_mul[g - 1][x]
        if length[y] > length[x]:
            x = y
    return table.elements[x]


def demazure_hop_a(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    w, v = check_perm(w), check_perm(v)
    _same_rank(w, v)
    return kernels.star_a(w, v)


def demazure_hop_b(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    w, v = check_signed(w), check_signed(v)
    _same_rank(w, v)
    return kernels.star_signed(w, v, True)


def demazure_hop_d(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """``w ⋆ v`` in ``D_n`` with lifting lists taken from the left factor ``w``."""
    w, v = check_even(w), check_even(v)
    _same_rank(w, v)
    return kernels.star_signed(w, v, False)


def demazure_hop(family: str, w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    if family == "A":
        return demazure_hop_a(w, v)
    if family == "B":
        return demazure_hop_b(w, v)
    if family == "D":
        return demazure_hop_d(w, v)
    raise InvalidWindowError(f"unknown family {family!r}")


def demazure_unfolded_b(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """Type-B product computed in ``S_2n`` on the normalized unfoldings, then folded."""
    w, v = check_signed(w), check_signed(v)
    _same_rank(w, v)
    prod = kernels.star_a(normalize(unfold(w)), normalize(unfold(v)))
    return fold(denormalize(prod))


def hop_chain(family: str, w: Sequence[int], v: Sequence[int]):
    """
    The hopping operators applied by :func:`demazure_hop`, with traces.

    Returns ``(start, steps)`` where ``start = wv`` and each step is
    ``(i, lifted_list, HopTrace)``.
    """
    w, v = check_element(family, w), check_element(family, v)
    _same_rank(w, v)
    n = len(w)
    top = n if family == "B" else n - 1
    hop = hop_a_traced if family == "A" else hop_signed_traced
    x = start = compose(family, w, v)
    steps = []
    for i in range(1, top + 1):
        L = lift(family, w, i, product_order=True)
        x, trace = hop(x, i, L)
        steps.append((i, L, trace))
    return start, steps


@dataclass(frozen=True)
class TypeDCounterexample:
    left: tuple[int, ...]
    right: tuple[int, ...]
    left_normalized: tuple[int, ...]
    right_normalized: tuple[int, ...]
    unfolded_product: tuple[int, ...]  # Demazure product in S_2n
    folded: tuple[int, ...]
    folded_parity: str
    true_product: tuple[int, ...]

    @property
    def routes_agree(self) -> bool:
        return self.folded == self.true_product


def unfold_star_fold_d_counterexample(
    left: Sequence[int] = (1, 4, -2, -3), right: Sequence[int] = (4, -1, 2, -3)
) -> TypeDCounterexample:
    """Run the type-B unfolding route on a type-D pair and compare with the true product."""
    left, right = check_even(left), check_even(right)
    a, b = normalize(unfold(left)), normalize(unfold(right))
    prod = kernels.star_a(a, b)
    folded = fold(denormalize(prod))
    return TypeDCounterexample(
        left=left,
        right=right,
        left_normalized=a,
        right_normalized=b,
        unfolded_product=prod,
        folded=folded,
        folded_parity=parity(folded),
        true_product=demazure_hop_d(left, right),
    )


def _interval_indices(table: GroupTable, word: Sequence[int]) -> frozenset[int]:
    mult = table.mult_table() if len(table) <= 4096 else None
    gens = [table.find(_generator(table, g)) for g in word]
    current = {0}
    for g, gi in zip(word, gens):
        if mult is not None:
            current |= {int(mult[x, gi]) for x in current}
        else:
            s = table.elements[gi]
            current |= {table.index[compose(table.family, table.elements[x], s)] for x in current}
    return frozenset(current)


def _generator(table: GroupTable, g: int) -> tuple[int, ...]:
    return table.elements[int(table.left_mul[g - 1, 0])]


def lower_interval(family: str, u: Sequence[int], bound: int = LOWER_INTERVAL_BOUND,
                   word: Sequence[int] | None = None) -> frozenset[tuple[int, ...]]:
    """
    The Bruhat interval ``[id, u]``: all products of subsequences of a reduced word of ``u``.

    Subsequence products are accumulated letter by letter, so the cost is
    linear in the length times the interval size rather than ``2**length``.
    """
    u = check_element(family, u)
    table = oracle_table(family, len(u))
    if word is None:
        word = table.reduced_word_of(u)
    if len(word) > bound:
        raise CapacityError(f"length {len(word)} exceeds lower-interval bound {bound}")
    return frozenset(table.elements[i] for i in _interval_indices(table, word))


def interval_product_check(family: str, w: Sequence[int], v: Sequence[int],
                           bound: int = LOWER_INTERVAL_BOUND) -> bool:
    """Whether ``{ab : a ≤ w, b ≤ v}`` equals ``[id, w ⋆ v]``."""
    w, v = check_element(family, w), check_element(family, v)
    _same_rank(w, v)
    table = oracle_table(family, len(w))
    words = [table.reduced_word_of(x) for x in (w, v)]
    prod = table.reduced_word_of(demazure_oracle(family, w, v))
    for word in (*words, prod):
        if len(word) > bound:
            raise CapacityError(f"length {len(word)} exceeds lower-interval bound {bound}")
    lower_w = _interval_indices(table, words[0])
    lower_v = _interval_indices(table, words[1])
    mult = table.mult_table()
    products = set(np.unique(mult[np.ix_(sorted(lower_w), sorted(lower_v))]).tolist())
    return products == set(_interval_indices(table, prod))


def product(u: Element, v: Element, method: Method = "hopping") -> Element:
    if u.family != v.family:
        raise InvalidWindowError(f"family mismatch: {u.family} vs {v.family}")
    fam = u.family
    if method == "hopping":
        out = demazure_hop(fam, u.window, v.window)
    elif method == "oracle":
        out = demazure_oracle(fam, u.window, v.window)
    elif method == "plain":
        out = compose(fam, u.window, v.window)
    elif method == "unfolded":
        if fam != "B":
            raise InvalidWindowError("the unfolded route is only valid for type B")
        out = demazure_unfolded_b(u.window, v.window)
    else:
        raise InvalidWindowError(f"unknown method {method!r}")
    return Element(fam, out)


def elements(family: str, n: int) -> Iterable[tuple[int, ...]]:
    return oracle_table(family, n).elements
