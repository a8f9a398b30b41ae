"""
Maximal parabolic decomposition of type-D elements.

Every ``w`` in ``D_n`` factors as ``w = Q_{n-1} Q_{n-2} ... Q_1`` where, for
``i <= n-2``, ``Q_i`` is a minimal coset representative of
``W_{s_i..s_n}`` modulo ``W_{s_{i+1}..s_n}`` and ``Q_{n-1}`` lies in
``W_{s_{n-1}, s_n}``.  The representatives come in four forms:

====  ==========================================  =====================
form  word (level i <= n-2)                       word (level n-1)
====  ==========================================  =====================
0     id                                          id
1     s_i ... s_j                                 s_{n-1}
2     s_i ... s_{n-2} s_n s_{n-1} ... s_j         s_n s_{n-1}
3     s_i ... s_{n-2} s_n                         s_n
====  ==========================================  =====================

>>> d = decompose_d((2, -4, -1, 5, 3))
>>> [q.describe(d.n) for q in d.factors]
['Q_4 form 2: s_5s_4', 'Q_3 form 3: s_3s_5', 'Q_2 form 0: id', 'Q_1 form 2 (j=3): s_1s_2s_3s_5s_4s_3']
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InvalidWindowError
from .hopping import hop_signed
from .notation import format_word
from .perm import eval_word, identity
from .signed import check_even, compose_signed, inverse_signed

__all__ = [
    "QFactor", "Decomposition", "realize_q", "candidates", "decompose_d",
    "classify_q", "l_list", "t_list", "q_star",
]


@dataclass(frozen=True)
class QFactor:
    level: int
    form: int
    j: int | None = None

    def validate(self, n: int) -> "QFactor":
        i, j = self.level, self.j
        ok = 1 <= i <= n - 1 and self.form in (0, 1, 2, 3)
        if ok and i <= n - 2 and self.form in (1, 2):
            ok = j is not None and i <= j <= n - 1
        elif ok:
            ok = j is None
        if not ok:
            raise InvalidWindowError(f"malformed factor {self!r} for D_{n}")
        return self

    def word(self, n: int) -> tuple[int, ...]:
        self.validate(n)
        i, j, form = self.level, self.j, self.form
        if form == 0:
            return ()
        if i == n - 1:
            return {1: (n - 1,), 2: (n, n - 1), 3: (n,)}[form]
        if form == 1:
            return tuple(range(i, j + 1))
        head = tuple(range(i, n - 1)) + (n,)
        if form == 3:
            return head
        return head + tuple(range(n - 1, j - 1, -1))

    def window(self, n: int) -> tuple[int, ...]:
        return _window(self, n)

    def describe(self, n: int) -> str:
        jj = f" (j={self.j})" if self.j is not None else ""
        return f"Q_{self.level} form {self.form}{jj}: {format_word(self.word(n))}"


@lru_cache(maxsize=None)
def _window(q: QFactor, n: int) -> tuple[int, ...]:
    return eval_word("D", n, q.word(n))


def realize_q(q: QFactor, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The window and normalized word of a factor."""
    return q.window(n), q.word(n)


@lru_cache(maxsize=None)
def candidates(level: int, n: int) -> tuple[QFactor, ...]:
    """All representatives at ``level``: ``2(n - level) + 2`` of them below ``n-1``, else 4."""
    if not 1 <= level <= n - 1:
        raise InvalidWindowError(f"level {level} is out of range for D_{n}")
    if level == n - 1:
        return tuple(QFactor(level, f) for f in range(4))
    out = [QFactor(level, 0)]
    out += [QFactor(level, 1, j) for j in range(level, n)]
    out += [QFactor(level, 2, j) for j in range(level, n)]
    out.append(QFactor(level, 3))
    return tuple(out)


@dataclass(frozen=True)
class Decomposition:
    n: int
    factors: tuple[QFactor, ...]  # Q_{n-1}, ..., Q_1

    def factor(self, level: int) -> QFactor:
        return self.factors[self.n - 1 - level]

    def partial(self, lo: int) -> tuple[int, ...]:
        """Window of the product ``Q_{n-1} ... Q_lo``; ``lo = n`` gives the identity."""
        w = identity(self.n)
        for level in range(self.n - 1, lo - 1, -1):
            w = compose_signed(w, self.factor(level).window(self.n))
        return w

    def word(self) -> tuple[int, ...]:
        return tuple(x for q in self.factors for x in q.word(self.n))

    def to_json(self) -> str:
        return json.dumps([
            {"level": q.level, "form": q.form, "j": q.j,
             "word": list(q.word(self.n)), "window": list(q.window(self.n))}
            for q in self.factors
        ])


def decompose_d(w: Sequence[int]) -> Decomposition:
    """
    Factor ``w`` as ``Q_{n-1} ... Q_1``.

    At each level the unique candidate whose removal leaves a residual fixing
    value ``i`` at position ``i`` is selected; uniqueness is asserted.
    """
    w = check_even(w)
    n = len(w)
    if n < 2:
        raise InvalidWindowError("type D needs rank at least 2")
    residual = w
    chosen = []
    for level in range(1, n - 1):
        hits = []
        for q in candidates(level, n):
            rest = compose_signed(residual, inverse_signed(q.window(n)))
            if rest[level - 1] == level:
                hits.append((q, rest))
        if len(hits) != 1:
            raise AssertionError(f"level {level} of {list(w)}: {len(hits)} candidates fit")
        q, residual = hits[0]
        chosen.append(q)
    last = [q for q in candidates(n - 1, n) if q.window(n) == residual]
    if len(last) != 1:
        raise AssertionError(f"residual {list(residual)} is not in W_(s_{n-1}, s_n)")
    chosen.append(last[0])
    return Decomposition(n, tuple(reversed(chosen)))


def classify_q(window_or_word: Sequence[int], n: int, is_word: bool = False) -> QFactor:
    """
    Identify a representative from its window or from any word spelling it.

    >>> classify_q((1, 2, 3, 4, 5, 3), 5, is_word=True)
    QFactor(level=1, form=2, j=3)
    """
    target = eval_word("D", n, window_or_word) if is_word else check_even(window_or_word, n)
    if target == identity(n):
        raise InvalidWindowError("the identity is form 0 at every level; give the level explicitly")
    for level in range(1, n):
        for q in candidates(level, n):
            if q.window(n) == target:
                return q
    raise InvalidWindowError(f"{list(target)} is not a parabolic representative in D_{n}")


def l_list(q: QFactor, n: int) -> tuple[int, ...]:
    """The hop list ``L_i`` attached to ``Q_i`` (empty for form 0)."""
    q.validate(n)
    i, j, form = q.level, q.j, q.form
    if form == 0:
        return ()
    if i == n - 1:
        return {1: (n,), 2: (n, -n), 3: (-n,)}[form]
    if form == 1:
        return tuple(range(i + 1, j + 2))
    if form == 2:
        return tuple(range(i + 1, n + 1)) + tuple(-k for k in range(n, j, -1))
    return tuple(range(i + 1, n)) + (-n,)


def t_list(q: QFactor, n: int) -> tuple[int, ...]:
    """
    Preimage ``Q_i^{-1}(L_i)``: the positions that the entries at positions
    ``L_i`` move to under right multiplication by ``Q_i``.  Hence
    ``r(L_i) = (r Q_i)(T_i)`` for every ``r``.

    >>> t_list(QFactor(1, 1, 3), 5), t_list(QFactor(1, 2, 3), 5), t_list(QFactor(2, 3), 5)
    ((1, 2, 3), (1, 2, 4, -5, 5, -4), (2, 3, 4))
    """
    q.validate(n)
    i, j, form = q.level, q.j, q.form
    if form == 0 or i == n - 1:
        raise InvalidWindowError("t_list is defined for forms 1-3 below level n-1")
    if form == 1:
        return tuple(range(i, j + 1))
    if form == 2:
        return (tuple(range(i, j)) + tuple(range(j + 1, n)) + (-n, n)
                + tuple(-k for k in range(n - 1, j, -1)))
    return tuple(range(i, n))


def q_star(q: QFactor, w: Sequence[int]) -> tuple[int, ...]:
    """``Q_i ⋆ w`` computed as ``h_{i, L_i}(Q_i w)``."""
    w = check_even(w)
    n = len(w)
    return hop_signed(compose_signed(q.window(n), w), q.level, l_list(q, n))
