"""Local pair features: common-neighbor count and neighborhood densities.

Density of a node set is the fraction of realized edges among all possible
edges inside the set (a clustering coefficient generalized to arbitrary
sets). The ``convention`` switch controls the numerator: ``standard`` counts
each unordered edge once (range [0, 1]); ``literal`` counts both
orientations (range [0, 2]). Standard is the default; reports record which
one was used.
"""

from __future__ import annotations

from typing import Iterable

from .graph import Graph

DENSITY_CONVENTIONS = ("standard", "literal")


def set_density(g: Graph, members: Iterable[int], convention: str = "standard") -> float:
    """Density of the node set: edges inside / (|s| * (|s|-1) / 2).

    Sets of size <= 1 have density 0 (the denominator would vanish).
    """
    if convention not in DENSITY_CONVENTIONS:
        raise ValueError(f"unknown density convention {convention!r}")
    s = frozenset(members)
    for v in s:
        if not 0 <= v < g.node_count:
            raise ValueError(f"set member {v} is not a graph node")
    k = len(s)
    if k <= 1:
        return 0.0
    inside = 0
    # iterate each member's adjacency and halve: O(sum of member degrees)
    for v in s:
        inside += sum(1 for w in g.neighbors(v) if w in s)
    inside //= 2
    if convention == "literal":
        inside *= 2
    return inside / (k * (k - 1) / 2)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise ValueError(f"pair features need two distinct nodes, got ({u}, {v})")
    g.neighbors(u)
    g.neighbors(v)


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    """Number of common friends of u and v."""
    _check_pair(g, u, v)
    return len(g.neighbors(u) & g.neighbors(v))


def common_neighborhood_density(g: Graph, u: int, v: int, convention: str = "standard") -> float:
    """Density of the common friends of u and v (their level of adhesion)."""
    _check_pair(g, u, v)
    return set_density(g, g.neighbors(u) & g.neighbors(v), convention)


def union_neighborhood_density(g: Graph, u: int, v: int, convention: str = "standard") -> float:
    """Density of the union of the two neighborhoods.

    u and v themselves belong to the union only when adjacent to the other
    node (i.e. only when they are someone's neighbor within the pair).
    """
    _check_pair(g, u, v)
    return set_density(g, g.neighbors(u) | g.neighbors(v), convention)
