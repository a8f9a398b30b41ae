"""
Ground truth for small ranks: breadth-first enumeration of a Coxeter group.

The table is built from the identity by left multiplication with every
simple generator.  BFS distance is the Coxeter length, and the BFS parent
links spell a reduced word for every element.  Nothing here relies on a
closed-form length formula.

>>> t = build_table("D", 4)
>>> len(t), t.max_length
(192, 12)
>>> t.reduced_word_of((2, 1, 3, 4))
(1,)
"""

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

import numpy as np

from .errors import CapacityError, InvalidWindowError
from .notation import format_window, format_word
from .perm import gen_action_a, identity
from .signed import gen_action_b, gen_action_d

__all__ = ["GroupTable", "build_table", "group_order", "length_of", "reduced_word_of",
           "is_left_descent", "DEFAULT_BUDGET"]

DEFAULT_BUDGET = 400_000

_ACTIONS = {"A": gen_action_a, "B": gen_action_b, "D": gen_action_d}


def group_order(family: str, n: int) -> int:
    if family == "A":
        return factorial(n)
    if family == "B":
        return 2**n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    raise InvalidWindowError(f"unknown family {family!r}")


def num_generators(family: str, n: int) -> int:
    return n - 1 if family == "A" else n


@dataclass(eq=False)
class GroupTable:
    """All elements of a finite Coxeter group, indexed in BFS order."""
    family: str
    rank: int
    elements: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    length: np.ndarray  # key: element index
    parent: np.ndarray  # key: element index; -1 for the identity
    parent_gen: np.ndarray  # key: element index; generator s with elt = s * parent
    left_mul: np.ndarray  # shape (num generators, N); left_mul[g-1, x] = index of s_g * x
    _mult: np.ndarray | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.elements)

    @property
    def generators(self) -> range:
        return range(1, self.left_mul.shape[0] + 1)

    @property
    def max_length(self) -> int:
        return int(self.length.max())

    def find(self, w: Sequence[int]) -> int:
        try:
            return self.index[tuple(w)]
        except KeyError:
            raise InvalidWindowError(
                f"{format_window(w)} is not an element of {self.family}_{self.rank}"
            ) from None

    def length_of(self, w: Sequence[int]) -> int:
        return int(self.length[self.find(w)])

    def word_of_index(self, idx: int) -> tuple[int, ...]:
        word = []
        while self.parent[idx] >= 0:
            word.append(int(self.parent_gen[idx]))
            idx = int(self.parent[idx])
        return tuple(word)

    def reduced_word_of(self, w: Sequence[int]) -> tuple[int, ...]:
        return self.word_of_index(self.find(w))

    def is_left_descent(self, s: int, w: Sequence[int]) -> bool:
        x = self.find(w)
        return bool(self.length[self.left_mul[s - 1, x]] < self.length[x])

    def mult_table(self) -> np.ndarray:
        """Full multiplication table ``M[a, b] = index(a * b)``, built on first use."""
        if self._mult is None:
            if len(self) > 4096:
                raise CapacityError(f"multiplication table of {len(self)} elements is too large")
            from .demazure import compose  # local: demazure imports this module

            idx = self.index
            elts = self.elements
            fam = self.family
            self._mult = np.array(
                [[idx[compose(fam, a, b)] for b in elts] for a in elts], dtype=np.int32
            )
        return self._mult

    def dump(self) -> Iterator[str]:
        """One line per element: window, length, reduced word."""
        for i, w in enumerate(self.elements):
            yield f"{format_window(w)}\t{int(self.length[i])}\t{format_word(self.word_of_index(i))}"


@lru_cache(maxsize=None)
def build_table(family: str, n: int, budget: int = DEFAULT_BUDGET) -> GroupTable:
    if family not in _ACTIONS:
        raise InvalidWindowError(f"unknown family {family!r}")
    if n < 1 or (family == "D" and n < 2):
        raise InvalidWindowError(f"rank {n} is not valid for family {family}")
    order = group_order(family, n)
    if order > budget:
        raise CapacityError(f"{family}_{n} has {order} elements, budget is {budget}")
    act = _ACTIONS[family]
    gens = num_generators(family, n)
    e = identity(n)
    elements = [e]
    index = {e: 0}
    length = [0]
    parent = [-1]
    parent_gen = [0]
    left_mul = [[0] * order for _ in range(gens)]
    head = 0
    while head < len(elements):
        w = elements[head]
        for g in range(1, gens + 1):
            child = act(w, g, "left")
            c = index.get(child)
            if c is None:
                c = len(elements)
                index[child] = c
                elements.append(child)
                length.append(length[head] + 1)
                parent.append(head)
                parent_gen.append(g)
            left_mul[g - 1][head] = c
        head += 1
    assert len(elements) == order, (family, n, len(elements))
    return GroupTable(
        family=family,
        rank=n,
        elements=elements,
        index=index,
        length=np.array(length, dtype=np.int32),
        parent=np.array(parent, dtype=np.int64),
        parent_gen=np.array(parent_gen, dtype=np.int32),
        left_mul=np.array(left_mul, dtype=np.int64),
    )


def length_of(table: GroupTable, w: Sequence[int]) -> int:
    return table.length_of(w)


def reduced_word_of(table: GroupTable, w: Sequence[int]) -> tuple[int, ...]:
    return table.reduced_word_of(w)


def is_left_descent(table: GroupTable, s: int, w: Sequence[int]) -> bool:
    return table.is_left_descent(s, w)
