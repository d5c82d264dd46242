"""Admissible color profiles for reductions of colored graphs (orbifolds).

Edges carry integer colours greater than 1.  A sphere may be used for a
reduction only if the colours of the points where it meets the graph form an
allowed profile: no single points, pairs of equal colours, and the triples
``(2, 2, n)`` for ``n >= 2`` and ``(2, 3, k)`` for ``3 <= k <= 5``.  A sphere
missing the graph entirely is always allowed.
"""

from __future__ import annotations

from typing import Iterable

from .errors import ProfileTooLarge


def _color(c: int) -> int:
    if isinstance(c, bool) or not isinstance(c, int) or c < 2:
        raise ValueError(f"colors are integers greater than 1, got {c!r}")
    return c


def pair_admissible(a: int, b: int) -> bool:
    return _color(a) == _color(b)


def triple_admissible(a: int, b: int, c: int) -> bool:
    x, y, z = sorted(map(_color, (a, b, c)))
    if (x, y) == (2, 2):
        return True
    return (x, y) == (2, 3) and 3 <= z <= 5


def profile_admissible(profile: Iterable[int]) -> bool:
    colors = [_color(c) for c in profile]
    if len(colors) > 3:
        raise ProfileTooLarge(len(colors))
    if len(colors) == 0:
        return True
    if len(colors) == 1:
        return False
    if len(colors) == 2:
        return pair_admissible(*colors)
    return triple_admissible(*colors)
