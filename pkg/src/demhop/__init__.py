"""
Demazure products in types A, B and D computed from one-line notation.

>>> from demhop import Element, product
>>> product(Element("D", (2, -4, -1, 5, 3)), Element("D", (-4, 3, -5, -1, -2))).window
(-1, -3, -4, -2, 5)
"""

from .cayley import GroupTable, build_table, is_left_descent, length_of, reduced_word_of
from .demazure import (
    Element, demazure_hop, demazure_hop_a, demazure_hop_b, demazure_hop_d, demazure_oracle,
    demazure_unfolded_b, hop_chain, interval_product_check, lower_interval, product,
    unfold_star_fold_d_counterexample,
)
from .errors import (
    CapacityError, DemhopError, InvalidWindowError, MalformedUnfoldingError, RankMismatchError,
)
from .hopping import hop_a, hop_signed, hoplists_equivalent, lift, lift_a, lift_b, lift_d
from .kernels import BACKEND
from .notation import format_window, parse_window
from .parabolic import Decomposition, QFactor, decompose_d

__version__ = "0.1.0"

__all__ = [
    "GroupTable", "build_table", "is_left_descent", "length_of", "reduced_word_of",
    "Element", "demazure_hop", "demazure_hop_a", "demazure_hop_b", "demazure_hop_d",
    "demazure_oracle", "demazure_unfolded_b", "hop_chain", "interval_product_check",
    "lower_interval", "product", "unfold_star_fold_d_counterexample",
    "CapacityError", "DemhopError", "InvalidWindowError", "MalformedUnfoldingError",
    "RankMismatchError", "hop_a", "hop_signed", "hoplists_equivalent", "lift", "lift_a",
    "lift_b", "lift_d", "BACKEND", "format_window", "parse_window", "Decomposition", "QFactor",
    "decompose_d",
]
