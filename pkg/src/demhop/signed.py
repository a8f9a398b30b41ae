"""
Signed permutations (type B) and even signed permutations (type D).

A signed permutation is a tuple of nonzero integers whose absolute values
form a permutation of ``1..n``; it acts on ``±{1..n}`` by ``w(-a) = -w(a)``.
Values of ``±{1..n}`` are totally ordered as

    1 < 2 < ... < n < -n < ... < -2 < -1

and the unfolding of a window appends its position-reversed, sign-flipped
copy.  Positions of the unfolding are labelled ``1, ..., n, -n, ..., -1``.

>>> unfold((4, -2, 3, -1))
(4, -2, 3, -1, 1, -3, 2, -4)
>>> normalize(unfold((4, -2, 3, -1)))
(4, 7, 3, 8, 1, 6, 2, 5)
"""

from typing import Literal, Sequence

from .errors import InvalidWindowError, MalformedUnfoldingError, RankMismatchError
from .perm import Side, gen_action_a

__all__ = [
    "pm_key", "cmp_pm", "check_signed", "check_even", "unfold", "fold",
    "normalize", "denormalize", "compose_signed", "inverse_signed",
    "gen_action_b", "gen_action_d", "generator", "parity", "is_even",
    "negative_count",
]


def pm_key(x: int, n: int) -> int:
    """Rank of ``x`` in the order on ``±{1..n}``, as an integer in ``1..2n``."""
    return x if x > 0 else 2 * n + 1 + x


def cmp_pm(a: int, b: int, n: int | None = None) -> int:
    """
    Three-way comparison under ``1 < ... < n < -n < ... < -1``.

    >>> cmp_pm(3, -5), cmp_pm(-5, -3), cmp_pm(2, 2)
    (-1, -1, 0)
    """
    for x in (a, b):
        if x == 0 or (n is not None and abs(x) > n):
            raise InvalidWindowError(f"{x} is not in ±[1..{n if n else 'n'}]")
    ka, kb = (a < 0, a), (b < 0, b)
    return (ka > kb) - (ka < kb)


def check_signed(window: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    w = tuple(window)
    if n is not None and len(w) != n:
        raise InvalidWindowError(f"expected {n} entries, got {len(w)}")
    if sorted(abs(x) for x in w) != list(range(1, len(w) + 1)):
        raise InvalidWindowError(f"{list(w)} is not a signed permutation of rank {len(w)}")
    return w


def negative_count(w: Sequence[int]) -> int:
    return sum(1 for x in w if x < 0)


def parity(w: Sequence[int]) -> Literal["even", "odd"]:
    """
    >>> parity((-2, -1, 4, -3))
    'odd'
    """
    return "odd" if negative_count(w) % 2 else "even"


def is_even(w: Sequence[int]) -> bool:
    return negative_count(w) % 2 == 0


def check_even(window: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    w = check_signed(window, n)
    if not is_even(w):
        raise InvalidWindowError(f"{list(w)} has an odd number of negative entries")
    return w


def unfold(w: Sequence[int]) -> tuple[int, ...]:
    return tuple(w) + tuple(-x for x in reversed(w))


def _check_antisymmetric(p: Sequence[int]) -> int:
    size = len(p)
    if size % 2:
        raise MalformedUnfoldingError(f"unfolding of odd length {size}")
    n = size // 2
    if sorted(abs(x) for x in p) != sorted(list(range(1, n + 1)) * 2):
        raise MalformedUnfoldingError(f"{list(p)} is not a permutation of ±[1..{n}]")
    for k in range(n):
        if p[size - 1 - k] != -p[k]:
            raise MalformedUnfoldingError(
                f"{list(p)}: entry at position {k + 1} does not mirror its partner"
            )
    return n


def fold(p: Sequence[int]) -> tuple[int, ...]:
    n = _check_antisymmetric(p)
    return tuple(p[:n])


def normalize(p: Sequence[int]) -> tuple[int, ...]:
    """Relabel an unfolding over ``±{1..n}`` as a permutation of ``1..2n``."""
    n = len(p) // 2
    return tuple(pm_key(x, n) for x in p)


def denormalize(q: Sequence[int]) -> tuple[int, ...]:
    n = len(q) // 2
    p = tuple(x if x <= n else x - 2 * n - 1 for x in q)
    _check_antisymmetric(p)
    return p


def compose_signed(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """
    Product ``uv`` with ``(uv)(i) = u(v(i))`` and ``u(-a) = -u(a)``.

    >>> compose_signed((-5, 3, 1, -2, 4), (-4, 2, -1, -3, 5))
    (2, 3, 5, -1, 4)
    """
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)


def inverse_signed(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[abs(val) - 1] = pos if val > 0 else -pos
    return tuple(inv)


def _check_gen(n: int, i: int, family: str) -> None:
    if not 1 <= i <= n or (family == "D" and n < 2):
        raise InvalidWindowError(f"generator s_{i} out of range for {family}_{n}")


def gen_action_b(w: Sequence[int], i: int, side: Side = "left") -> tuple[int, ...]:
    """
    Act by the type-B generator ``s_i`` through the unfolding into ``S_2n``.

    ``s_i`` (i < n) unfolds to ``s'_i s'_{2n-i}`` and ``s_n`` to ``s'_n``.

    >>> gen_action_b((1, 2, 3), 3, "right")
    (1, 2, -3)
    """
    n = len(w)
    _check_gen(n, i, "B")
    q = normalize(unfold(w))
    q = gen_action_a(q, i, side)
    if i < n:
        q = gen_action_a(q, 2 * n - i, side)
    return fold(denormalize(q))


def gen_action_d(w: Sequence[int], i: int, side: Side = "left") -> tuple[int, ...]:
    """
    Act by the type-D generator ``s_i``; ``s_n`` swaps ``n-1, n`` and flips both signs.

    >>> gen_action_d((1, 2, -3, 4, -5), 5, "left")
    (1, 2, -3, -5, 4)
    >>> gen_action_d((1, 2, -3, 4, -5), 5, "right")
    (1, 2, -3, 5, -4)
    """
    n = len(w)
    _check_gen(n, i, "D")
    out = list(w)
    if side == "right":
        if i < n:
            out[i - 1], out[i] = out[i], out[i - 1]
        else:
            out[n - 2], out[n - 1] = -out[n - 1], -out[n - 2]
    elif side == "left":
        if i < n:
            swap = {i: i + 1, i + 1: i}
        else:
            swap = {n - 1: -n, n: -(n - 1)}
        out = []
        for x in w:
            y = swap.get(abs(x), abs(x))
            out.append(y if x > 0 else -y)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return tuple(out)


def generator(family: str, n: int, i: int) -> tuple[int, ...]:
    """Window of the simple generator ``s_i`` of ``family`` at rank ``n``."""
    from .perm import eval_word

    return eval_word(family, n, (i,))
