"""Minimum-excludant and nim-sum primitives shared by every game module.

Positions of a finite impartial game carry a non-negative integer value,
the nimber.  A position is a second-player win under normal play exactly
when its nimber is 0, and the nimber of a position made of independent
subgames is the XOR of the component nimbers.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable

Nimber = int


def mex(values: Iterable[int]) -> int:
    """Least non-negative integer missing from ``values``.

    Duplicates are allowed in the input; the empty collection yields 0.
    """
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def nim_sum(a: int, b: int) -> int:
    """Value of two independent games played side by side (bitwise XOR)."""
    return a ^ b


def sum_nimber(components: Iterable[int]) -> int:
    """Fold ``nim_sum`` over component values; the empty sum is 0."""
    return reduce(nim_sum, components, 0)
