"""Shipped Mathieu group M11 generator data and its standard transitive
actions.

Degrees 11 and 12 load from packaged generator files; 22 comes from the
coset action on the index-2 subgroup of a point stabilizer, 55 and 165 from
the actions on 2- and 3-subsets of 11 points, and 66 from the action on
2-subsets of 12 points.  Results are cached per process.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .groups import PermGroup, parse_group_text

M11_ORDER = 7920

DEGREES = (11, 12, 22, 55, 66, 165)


def _load(name: str) -> PermGroup:
    text = resources.files("socodes.data").joinpath(name).read_text(encoding="utf-8")
    return parse_group_text(text)


@lru_cache(maxsize=None)
def m11_natural() -> PermGroup:
    return _load("m11_11.grp")


@lru_cache(maxsize=None)
def m11_degree(n: int) -> PermGroup:
    """The transitive M11 action of the given degree."""
    if n == 11:
        return m11_natural()
    if n == 12:
        return _load("m11_12.grp")
    if n == 22:
        G = m11_natural()
        return G.coset_action(G.stabilizer(0).squares_subgroup())
    if n == 55:
        return m11_natural().action_on_ksubsets(2)
    if n == 66:
        return m11_degree(12).action_on_ksubsets(2)
    if n == 165:
        return m11_natural().action_on_ksubsets(3)
    raise ValueError(f"no built-in M11 action of degree {n}; "
                     f"supported: {DEGREES} (110/132/144 need user subgroup files)")
