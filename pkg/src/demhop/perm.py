"""
Type-A permutations in one-line notation.

A permutation of ``{1, ..., n}`` is a tuple ``(w(1), ..., w(n))``.  Products
follow the convention ``(uv)(i) = u(v(i))``, so left multiplication by
``s_i`` exchanges the *values* ``i`` and ``i+1`` while right multiplication
exchanges the *positions* ``i`` and ``i+1``.

>>> compose_a((6, 5, 4, 1, 7, 2, 3), (5, 4, 3, 6, 2, 1, 7))
(7, 1, 4, 2, 5, 6, 3)
>>> length_a((2, 1, 3))
1
"""

from typing import Literal, Sequence

from .errors import InvalidWindowError, RankMismatchError

__all__ = [
    "Side", "identity", "check_perm", "compose_a", "inverse_a", "length_a",
    "gen_action_a", "check_word", "eval_word",
]

Side = Literal["left", "right"]


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def check_perm(window: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Return ``window`` as a tuple, raising if it is not a permutation of 1..n."""
    w = tuple(window)
    if n is not None and len(w) != n:
        raise InvalidWindowError(f"expected {n} entries, got {len(w)}")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidWindowError(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def compose_a(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    if len(u) != len(v):
        raise RankMismatchError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse_a(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def length_a(w: Sequence[int]) -> int:
    """Coxeter length of a permutation, computed as its inversion count."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def gen_action_a(w: Sequence[int], i: int, side: Side = "left") -> tuple[int, ...]:
    """Multiply ``w`` by the simple transposition ``s_i = (i, i+1)``."""
    n = len(w)
    if not 1 <= i <= n - 1:
        raise InvalidWindowError(f"generator s_{i} out of range for S_{n}")
    out = list(w)
    if side == "right":
        out[i - 1], out[i] = out[i], out[i - 1]
    elif side == "left":
        out = [i + 1 if x == i else i if x == i + 1 else x for x in w]
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return tuple(out)


def check_word(family: str, n: int, word: Sequence[int]) -> tuple[int, ...]:
    top = n - 1 if family == "A" else n
    for letter in word:
        if not 1 <= letter <= top:
            raise InvalidWindowError(f"s_{letter} is not a generator of {family}_{n}")
    return tuple(word)


def eval_word(family: str, n: int, word: Sequence[int]) -> tuple[int, ...]:
    """
    The group element spelled by ``word``, as a window.

    >>> eval_word("D", 5, (1, 2, 1, 3, 5, 3, 2))
    (3, -5, 2, 4, -1)
    """
    from . import signed

    word = check_word(family, n, word)
    w = identity(n)
    if family == "A":
        act = gen_action_a
    elif family == "B":
        act = signed.gen_action_b
    elif family == "D":
        act = signed.gen_action_d
    else:
        raise InvalidWindowError(f"unknown family {family!r}")
    # s_1 s_2 ... s_k * id: innermost letter acts first
    for letter in reversed(word):
        w = act(w, letter, "left")
    return w
