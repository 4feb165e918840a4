"""Exact distance machinery: BFS layers, eccentricities, radius, diameter.

All distances are hop counts from breadth-first search.  Unreachable pairs
are marked with ``UNREACHABLE`` (infinity), which can never collide with a
valid hop count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Collection

from .graphs import Graph

UNREACHABLE = math.inf


@dataclass(frozen=True)
class MetricProfile:
    """Eccentricity summary of a connected graph.

    radius <= diameter <= 2 * radius always holds; ``center`` and
    ``periphery`` are the full (never truncated) sets of vertices attaining
    the radius and the diameter.
    """

    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    center: frozenset[int]
    periphery: frozenset[int]


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Hop distances from ``source``; UNREACHABLE marks missing paths."""
    n = g.n
    if not 0 <= source < n:
        raise ValueError(f"source {source} out of range for n={n}")
    rows = g.bitrows
    dist: list[int | float] = [UNREACHABLE] * n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        m = frontier
        while m:
            b = m & -m
            dist[b.bit_length() - 1] = d
            m ^= b
    return dist


def distance_matrix(g: Graph) -> list[list[int | float]]:
    """All-pairs hop distances as a dense row list."""
    return [bfs_distances(g, v) for v in range(g.n)]


def eccentricity(g: Graph, v: int) -> int:
    """Largest hop distance from ``v``; raises if g is disconnected."""
    n = g.n
    rows = g.bitrows
    full = (1 << n) - 1
    seen = frontier = 1 << v
    ecc = 0
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        if frontier:
            seen |= frontier
            ecc += 1
    if seen != full:
        raise ValueError("eccentricity is undefined on a disconnected graph")
    return ecc


def metric_profile(g: Graph) -> MetricProfile:
    """Radius, diameter, eccentricities, center and periphery of ``g``.

    Runs one BFS per vertex.  Rejects disconnected input, where these
    quantities are undefined.
    """
    eccs = tuple(eccentricity(g, v) for v in range(g.n))
    radius = min(eccs)
    diameter = max(eccs)
    center = frozenset(v for v, e in enumerate(eccs) if e == radius)
    periphery = frozenset(v for v, e in enumerate(eccs) if e == diameter)
    return MetricProfile(eccs, radius, diameter, center, periphery)


def distance_to_subgraph(g: Graph, u: int, h: Collection[int]) -> int | float:
    """min over v in h of d(u, v); zero exactly when u itself lies in h."""
    if not h:
        raise ValueError("subgraph vertex set must be nonempty")
    n = g.n
    target = 0
    for v in h:
        if not 0 <= v < n:
            raise ValueError(f"subgraph vertex {v} out of range for n={n}")
        target |= 1 << v
    if not 0 <= u < n:
        raise ValueError(f"vertex {u} out of range for n={n}")
    rows = g.bitrows
    seen = frontier = 1 << u
    d = 0
    while frontier:
        if frontier & target:
            return d
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return UNREACHABLE
