"""
Hopping operators ``h_{t,L}`` and lifting lists ``w↖i``.

``h_{t,L}`` repeatedly looks right of ``t`` (in the window for permutations,
in the unfolding for signed windows) for members of ``L`` that exceed ``t``,
takes the one appearing *latest in L*, and swaps it with ``t``; for signed
windows the mirror pair ``-t, -q`` is swapped as well.  It stops when no
candidate is left.

>>> hop_a((7, 1, 4, 2, 5, 6, 3), 1, [6, 5, 4])
(7, 4, 5, 2, 6, 1, 3)
>>> hop_signed((-4, 5, 3, -1, -2, -6), 1, [-3, 4, -5, 6])
(-1, -4, 3, 5, -2, -6)
>>> lift_d((2, -4, -1, 5, 3), 3)
(-4, 5)
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import _kernels_py, kernels
from .errors import CapacityError, InvalidWindowError
from .notation import format_window
from .perm import check_perm
from .signed import check_signed, pm_key, unfold

__all__ = [
    "HopStep", "HopTrace", "check_hoplist", "hop_a", "hop_signed", "hop_a_traced",
    "hop_signed_traced", "lift_a", "lift_b", "lift_b_centered", "lift_d", "lift", "apply_to_list",
    "hoplists_equivalent", "EQUIVALENCE_MAX_RANK",
]

EQUIVALENCE_MAX_RANK = 5


@dataclass(frozen=True)
class HopStep:
    position: int  # 1-based position of t after the swap (in the unfolding when signed)
    partner: int  # the value t was swapped with
    window: tuple[int, ...]  # window after the swap


@dataclass(frozen=True)
class HopTrace:
    t: int
    hoplist: tuple[int, ...]
    start: tuple[int, ...]
    steps: tuple[HopStep, ...]

    @property
    def result(self) -> tuple[int, ...]:
        return self.steps[-1].window if self.steps else self.start

    def to_text(self) -> str:
        lines = [f"h_{{{self.t},{format_window(self.hoplist)}}} on {format_window(self.start)}"]
        for step in self.steps:
            lines.append(
                f"  swap {self.t} <-> {step.partner}: {format_window(step.window)}"
                f"  (t now at position {step.position})"
            )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps([
            {"position": s.position, "partner": s.partner, "window": list(s.window)}
            for s in self.steps
        ])


def check_hoplist(L: Sequence[int], n: int, signed: bool) -> tuple[int, ...]:
    items = tuple(L)
    if len(set(items)) != len(items):
        raise InvalidWindowError(f"hop list {list(items)} repeats an entry")
    for x in items:
        if x == 0 or abs(x) > n or (not signed and x < 0):
            raise InvalidWindowError(f"hop list entry {x} is out of range for rank {n}")
    return items


def _check_t(t: int, n: int, signed: bool) -> None:
    if t == 0 or abs(t) > n or (not signed and t < 0):
        raise InvalidWindowError(f"hopping value {t} is out of range for rank {n}")


def hop_a(w: Sequence[int], t: int, L: Sequence[int]) -> tuple[int, ...]:
    w = check_perm(w)
    _check_t(t, len(w), False)
    return kernels.hop_a(w, t, check_hoplist(L, len(w), False))


def hop_signed(w: Sequence[int], t: int, L: Sequence[int]) -> tuple[int, ...]:
    """Hopping on a signed window; parity is not enforced on input or output."""
    w = check_signed(w)
    _check_t(t, len(w), True)
    return kernels.hop_signed(w, t, check_hoplist(L, len(w), True))


def hop_a_traced(w: Sequence[int], t: int, L: Sequence[int]) -> tuple[tuple[int, ...], HopTrace]:
    w = check_perm(w)
    _check_t(t, len(w), False)
    L = check_hoplist(L, len(w), False)
    steps: list[HopStep] = []

    def record(pos: int, partner: int, u: list) -> None:
        steps.append(HopStep(pos + 1, partner, tuple(u)))

    out = _kernels_py.hop_a(w, t, L, trace=record)
    return out, HopTrace(t, L, w, tuple(steps))


def hop_signed_traced(w: Sequence[int], t: int, L: Sequence[int]) -> tuple[tuple[int, ...], HopTrace]:
    w = check_signed(w)
    n = len(w)
    _check_t(t, n, True)
    L = check_hoplist(L, n, True)
    m = 2 * n + 1
    steps: list[HopStep] = []

    def record(pos: int, partner: int, u: list) -> None:
        window = tuple(x if x <= n else x - m for x in u[:n])
        steps.append(HopStep(pos + 1, partner if partner <= n else partner - m, window))

    out = _kernels_py.hop_signed(w, t, L, trace=record)
    return out, HopTrace(t, L, w, tuple(steps))


def lift_a(w: Sequence[int], a: int) -> tuple[int, ...]:
    """Entries left of ``a`` in ``w`` that exceed ``a``, in window order."""
    if not 1 <= a <= len(w):
        raise InvalidWindowError(f"{a} is out of range for rank {len(w)}")
    out = []
    for x in w:
        if x == a:
            break
        if x > a:
            out.append(x)
    return tuple(out)


def _lift_signed(w: Sequence[int], i: int, closed: bool) -> tuple[int, ...]:
    n = len(w)
    if not 1 <= i <= n:
        raise InvalidWindowError(f"{i} is out of range for rank {n}")
    lo, hi = pm_key(i, n), pm_key(-i, n)
    out = []
    for x in unfold(w):
        if x == i:
            break
        k = pm_key(x, n)
        if lo < k < hi or (closed and k == hi):
            out.append(x)
    return tuple(out)


def lift_b(w: Sequence[int], i: int) -> tuple[int, ...]:
    """
    Entries of ``unfold(w)`` left of ``i`` lying in ``(i, -i]``.

    >>> lift_b((-5, 3, 1, -2, 4), 2)
    (-5, 3, -2, 4, -4)
    """
    return _lift_signed(check_signed(w), i, closed=True)


def lift_b_centered(w: Sequence[int], i: int) -> tuple[int, ...]:
    """
    The entries of :func:`lift_b` reordered so that ``-i`` sits between the
    entries from the first and the second half of the unfolding.

    This is the list the type-B product actually hops with.  It differs from
    ``lift_b`` only when ``-i`` lies left of ``i``.

    >>> lift_b((-1, 2, 3), 1), lift_b_centered((-1, 2, 3), 1)
    ((-1, 2, 3, -3, -2), (2, 3, -1, -3, -2))
    """
    w = check_signed(w)
    n = len(w)
    if not 1 <= i <= n:
        raise InvalidWindowError(f"{i} is out of range for rank {n}")
    U = unfold(w)
    left = U[:U.index(i)]
    opened = _lift_signed(w, i, closed=False)
    first = [x for x in left[:n] if x in opened]
    second = [x for x in left[n:] if x in opened]
    middle = [-i] if -i in left else []
    return tuple(first + middle + second)


def lift_d(w: Sequence[int], i: int) -> tuple[int, ...]:
    """Entries of ``unfold(w)`` left of ``i`` lying in the open interval ``(i, -i)``."""
    return _lift_signed(check_signed(w), i, closed=False)


def lift(family: str, w: Sequence[int], i: int, product_order: bool = False) -> tuple[int, ...]:
    """``w↖i`` for ``family``; ``product_order`` selects the type-B list used by the product."""
    if family == "A":
        return lift_a(w, i)
    if family == "B":
        return lift_b_centered(w, i) if product_order else lift_b(w, i)
    if family == "D":
        return lift_d(w, i)
    raise InvalidWindowError(f"unknown family {family!r}")


def apply_to_list(w: Sequence[int], L: Sequence[int]) -> tuple[int, ...]:
    """
    Entrywise image ``[w(l_1), ..., w(l_k)]`` with ``w(-a) = -w(a)``.

    >>> apply_to_list((2, -4, -1, 5, 3), [2, 3, 4, 5, -5, -4])
    (-4, -1, 5, 3, -3, -5)
    """
    return tuple(w[x - 1] if x > 0 else -w[-x - 1] for x in L)


def hoplists_equivalent(i: int, L: Sequence[int], L2: Sequence[int], n: int,
                        max_rank: int = EQUIVALENCE_MAX_RANK) -> bool:
    """Whether ``h_{i,L}`` and ``h_{i,L2}`` agree on every element of ``D_n``."""
    if n > max_rank:
        raise CapacityError(f"exhaustive check over D_{n} exceeds max rank {max_rank}")
    _check_t(i, n, True)
    return _equivalent(i, check_hoplist(L, n, True), check_hoplist(L2, n, True), n)


@lru_cache(maxsize=65536)
def _equivalent(i: int, L: tuple[int, ...], L2: tuple[int, ...], n: int) -> bool:
    if L == L2:
        return True
    from .cayley import build_table

    hop = kernels.hop_signed
    return all(hop(w, i, L) == hop(w, i, L2) for w in build_table("D", n).elements)
