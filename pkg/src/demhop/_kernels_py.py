"""
Pure-Python hopping kernels.

This module is the fallback for the compiled ``_kernels`` extension and has
the same interface.  All functions take and return windows as tuples of
ints.  Signed hopping runs on the normalized unfolding: value ``x`` of
``±{1..n}`` is stored as ``pm_key(x)`` in ``1..2n``, so the order on
``±{1..n}`` becomes integer order and the mirror of ``k`` is ``2n+1-k``.
"""

from typing import Callable, Optional, Sequence

# trace callback: (0-based position of t after the swap, partner value, current array)
TraceFn = Callable[[int, int, list], None]


def _hop(u: list, pos: list, t: int, L: Sequence[int], mirror: bool,
         trace: Optional[TraceFn] = None) -> None:
    size = len(u)
    while True:
        pt = pos[t]
        best = 0
        for q in L:
            # latest member of L lying right of t and exceeding it
            if q > t and pos[q] > pt:
                best = q
        if not best:
            return
        pb = pos[best]
        u[pt], u[pb] = best, t
        pos[best], pos[t] = pt, pb
        if mirror:
            mt, mq = size + 1 - t, size + 1 - best
            if mt != best:
                a, b = pos[mt], pos[mq]
                u[a], u[b] = mq, mt
                pos[mq], pos[mt] = a, b
        if trace is not None:
            trace(pb, best, u)


def _positions(u: list) -> list:
    pos = [0] * (len(u) + 1)
    for p, x in enumerate(u):
        pos[x] = p
    return pos


def hop_a(w: Sequence[int], t: int, L: Sequence[int],
          trace: Optional[TraceFn] = None) -> tuple[int, ...]:
    u = list(w)
    _hop(u, _positions(u), t, L, False, trace)
    return tuple(u)


def _unfold_norm(w: Sequence[int]) -> list:
    m = 2 * len(w) + 1
    u = [x if x > 0 else m + x for x in w]
    return u + [m - x for x in reversed(u)]


def _fold_denorm(u: list, n: int) -> tuple[int, ...]:
    m = 2 * n + 1
    return tuple(x if x <= n else x - m for x in u[:n])


def hop_signed(w: Sequence[int], t: int, L: Sequence[int],
               trace: Optional[TraceFn] = None) -> tuple[int, ...]:
    n = len(w)
    m = 2 * n + 1
    u = _unfold_norm(w)
    nt = t if t > 0 else m + t
    nl = [x if x > 0 else m + x for x in L]
    _hop(u, _positions(u), nt, nl, True, trace)
    return _fold_denorm(u, n)


def star_a(w: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """``h_{n-1, w↖n-1} ... h_{1, w↖1}(wv)`` for permutations."""
    n = len(w)
    u = [w[x - 1] for x in v]
    pos = _positions(u)
    for i in range(1, n):
        lifted = []
        for x in w:
            if x == i:
                break
            if x > i:
                lifted.append(x)
        _hop(u, pos, i, lifted, False)
    return tuple(u)


def star_signed(w: Sequence[int], v: Sequence[int], closed: bool) -> tuple[int, ...]:
    """
    Hopping product for signed windows with lifts taken from ``w``.

    ``closed=True`` is type B: operators ``i = 1..n``, lifts over ``(i, -i]``
    with ``-i`` (when present) placed between the entries from the first and
    second half of the unfolding.  ``closed=False`` is type D: operators
    ``i = 1..n-1`` with lifts over the open interval ``(i, -i)``.
    """
    n = len(w)
    m = 2 * n + 1
    wv = [w[x - 1] if x > 0 else -w[-x - 1] for x in v]
    u = _unfold_norm(wv)
    pos = _positions(u)
    uw = _unfold_norm(w)
    top = n if closed else n - 1
    for i in range(1, top + 1):
        neg = m - i
        seen_neg = False
        lifted = []
        for p, x in enumerate(uw):
            if p == n and seen_neg:
                lifted.append(neg)
            if x == i:
                break
            if x == neg:
                seen_neg = closed
            elif i < x < neg:
                lifted.append(x)
        _hop(u, pos, i, lifted, True)
    return _fold_denorm(u, n)
