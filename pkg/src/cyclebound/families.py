"""Deterministic generators for the graph families with extremal cycle behavior.

Every generator re-verifies its own metric contract (radius, diameter,
circumference) before returning and raises ContractError on any mismatch,
so a wrong family can never be handed out silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import circumference
from .graphs import Graph, from_edges
from .metrics import bfs_distances, metric_profile


class ContractError(RuntimeError):
    """A generator produced a graph violating its own stated invariants."""


@dataclass(frozen=True)
class SunSpec:
    """Cycle length m with a pendant path (ray) of length k at every cycle vertex."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"sun cycle length must be >= 3, got {self.m}")
        if self.k < 1:
            raise ValueError(f"ray length must be >= 1, got {self.k}")

    @property
    def order(self) -> int:
        return self.m * (self.k + 1)


def cycle_graph(n: int) -> Graph:
    """The cycle C_n."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def sun_graph(m: int, k: int) -> Graph:
    """Cycle C_m with one ray of length k at every cycle vertex.

    Cycle vertices are 0..m-1; ray j occupies m+j*k .. m+j*k+k-1 in order
    of increasing distance from cycle vertex j.
    """
    spec = SunSpec(m, k)
    edges = [(i, (i + 1) % m) for i in range(m)]
    for j in range(m):
        prev = j
        for step in range(k):
            v = m + j * k + step
            edges.append((prev, v))
            prev = v
    g = from_edges(spec.order, edges)
    return g


def extremal_graph(r: int, d: int) -> Graph:
    """A graph of radius r, diameter d and circumference exactly 4r-2d.

    Exists for d = r (the cycle C_2r, r >= 2) and for r < d <= 2r-2 (the
    sun graph with cycle length 4r-2d and ray length d-r).  For d >= 2r-1
    the lower bound 4r-2d says nothing, so no witness is defined.
    """
    if d == r:
        if r < 2:
            raise ValueError(f"no witness for r={r}, d={d}: need r >= 2 when d = r")
        g = cycle_graph(2 * r)
    elif r < d <= 2 * r - 2:
        g = sun_graph(4 * r - 2 * d, d - r)
    elif d < r:
        raise ValueError(f"diameter {d} below radius {r} is impossible")
    else:
        raise ValueError(
            f"no witness for r={r}, d={d}: the bound 4r-2d is vacuous for d >= 2r-1"
        )
    _check_family_contract(g, r, d, 4 * r - 2 * d, "extremal_graph")
    return g


def tightness_witness(r: int) -> Graph:
    """Order-(3r-1) graph of radius r with no geodesic cycle of length 2r or 2r+1.

    A cycle of length 2r-1 carrying r pendant vertices at positions
    0,2,...,2r-2; the attachments 2r-2 and 0 are the only adjacent pair, so
    exactly two pendant ends sit at mutual distance 3.  Its circumference
    2r-1 shows that graphs one vertex beyond order 3r-2 can avoid long
    geodesic cycles entirely.
    """
    if r < 3:
        raise ValueError(f"tightness witness needs r >= 3, got {r}")
    m = 2 * r - 1
    edges = [(i, (i + 1) % m) for i in range(m)]
    for t in range(r):
        edges.append((2 * t, m + t))
    g = from_edges(3 * r - 1, edges)
    _check_family_contract(g, r, r + 1, m, "tightness_witness")
    profile = metric_profile(g)
    if profile.diameter > 2 * r - 2:
        raise ContractError(f"tightness_witness({r}): diameter exceeds 2r-2")
    pend = list(range(m, 3 * r - 1))
    at_three = 0
    for i, u in enumerate(pend):
        row = bfs_distances(g, u)
        for v in pend[i + 1:]:
            if row[v] == 3:
                at_three += 1
            elif row[v] <= 2:
                raise ContractError(f"tightness_witness({r}): pendant ends too close")
    if at_three != 1:
        raise ContractError(
            f"tightness_witness({r}): expected exactly one pendant pair at distance 3,"
            f" found {at_three}"
        )
    return g


def multi_sun(m: int, k: int, t: int) -> Graph:
    """Cycle C_m (m even) with t rays of length k at every cycle vertex.

    A decorated sun family: radius m/2+k and diameter m/2+2k are unchanged
    by adding parallel rays, while the circumference stays m.  Membership in
    the extremal family is re-verified on the constructed graph, never
    assumed.
    """
    if m < 3 or m % 2:
        raise ValueError(f"multi_sun cycle length must be even and >= 4, got {m}")
    if k < 1:
        raise ValueError(f"ray length must be >= 1, got {k}")
    if t < 1:
        raise ValueError(f"rays per cycle vertex must be >= 1, got {t}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    for j in range(m):
        for s in range(t):
            prev = j
            for step in range(k):
                v = m + (j * t + s) * k + step
                edges.append((prev, v))
                prev = v
    g = from_edges(m * (1 + t * k), edges)
    _check_family_contract(g, m // 2 + k, m // 2 + 2 * k, m, "multi_sun")
    return g


def _check_family_contract(g: Graph, radius: int, diameter: int, circ: int, name: str):
    profile = metric_profile(g)
    if (profile.radius, profile.diameter) != (radius, diameter):
        raise ContractError(
            f"{name}: expected radius {radius} and diameter {diameter}, built"
            f" ({profile.radius}, {profile.diameter})"
        )
    rep = circumference(g)
    got = 0 if rep is None else rep.length
    if got != circ:
        raise ContractError(f"{name}: expected circumference {circ}, built {got}")
