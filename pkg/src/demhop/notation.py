"""
Parsing and formatting of windows in one-line notation.

Windows are written ``[2,-4,-1,5,3]``; whitespace- or comma-separated
integers without brackets are accepted on input, and so is the keyword
``id`` when the rank is known.

>>> parse_window("[2, -4, -1, 5, 3]")
(2, -4, -1, 5, 3)
>>> parse_window("2 -4 -1 5 3")
(2, -4, -1, 5, 3)
>>> parse_window("id", n=3)
(1, 2, 3)
>>> format_window((2, -4, -1, 5, 3))
'[2,-4,-1,5,3]'
"""

import re
from typing import Optional, Sequence

from .errors import InvalidWindowError

__all__ = ["Family", "parse_family", "parse_window", "format_window", "parse_word", "format_word"]

Family = str  # one of "A", "B", "D"

FAMILIES = ("A", "B", "D")

_TOKEN = re.compile(r"-?\d+")


def parse_family(text: str) -> Family:
    fam = text.strip().upper()
    if fam not in FAMILIES:
        raise InvalidWindowError(f"unknown family {text!r}; expected one of a, b, d")
    return fam


def parse_window(text: str, n: Optional[int] = None) -> tuple[int, ...]:
    """Parse a window; validation against a family happens elsewhere."""
    body = text.strip()
    if body.lower() == "id":
        if n is None:
            raise InvalidWindowError("'id' needs an explicit rank")
        return tuple(range(1, n + 1))
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    # bare digit strings such as 7142563 are read one digit per entry
    if re.fullmatch(r"\d+", body) and len(body) > 1:
        return tuple(int(c) for c in body)
    leftover = _TOKEN.sub("", body).replace(",", "").split()
    if leftover:
        raise InvalidWindowError(f"cannot parse window {text!r}")
    window = tuple(int(tok) for tok in _TOKEN.findall(body))
    if n is not None and len(window) != n:
        raise InvalidWindowError(f"window {text!r} has {len(window)} entries, expected {n}")
    return window


def format_window(window: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in window) + "]"


def parse_word(text: str) -> tuple[int, ...]:
    """
    Parse a generator word such as ``s1s2s1`` or ``1 2 1`` into letter indices.

    >>> parse_word("s_1s_2s_1s_3s_5s_3s_2")
    (1, 2, 1, 3, 5, 3, 2)
    >>> parse_word("")
    ()
    """
    body = text.strip()
    if not body or body in ("id", "e"):
        return ()
    if "s" in body:
        letters = re.findall(r"s_?\{?(\d+)\}?", body)
        if not letters or re.sub(r"s_?\{?\d+\}?", "", body).strip(" *,"):
            raise InvalidWindowError(f"cannot parse word {text!r}")
        return tuple(int(x) for x in letters)
    return tuple(int(x) for x in re.split(r"[\s,]+", body.strip("[]")) if x)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "id"
    return "".join(f"s_{i}" for i in word)
