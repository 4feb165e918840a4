"""Exact cycle machinery: circumference, geodesic cycles, blocks.

The longest-cycle search is exact backtracking over simple paths.  Every
cycle is generated exactly once: it is rooted at its smallest vertex, all
other path vertices are larger, and of the two traversal directions only
the one whose second vertex is smaller than its last is accepted.  Branches
are cut with a reachability bound (current path length plus the number of
still-reachable unused vertices) that can never discard a longer cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, is_connected
from .metrics import bfs_distances, distance_matrix, metric_profile


@dataclass(frozen=True)
class CycleReport:
    """A witness cycle in vertex order, its length, and a geodesic flag."""

    cycle: tuple[int, ...]
    length: int
    geodesic: bool


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal nonseparable subgraphs (as edge sets) and cut-vertices."""

    blocks: tuple[tuple[tuple[int, int], ...], ...]
    cut_vertices: frozenset[int]


def _validate_cycle(g: Graph, seq: Sequence[int]) -> list[int]:
    cyc = list(seq)
    if len(cyc) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(cyc)) != len(cyc):
        raise ValueError("cycle sequence repeats a vertex")
    for v in cyc:
        if not 0 <= v < g.n:
            raise ValueError(f"cycle vertex {v} out of range for n={g.n}")
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"cycle edge ({a}, {b}) missing from graph")
    return cyc


def is_geodesic_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff every pairwise distance inside the cycle equals the graph distance.

    The sequence must be a valid simple cycle of g, otherwise ValueError.
    """
    cyc = _validate_cycle(g, cycle)
    L = len(cyc)
    rows = {v: bfs_distances(g, v) for v in cyc}
    for i in range(L):
        di = rows[cyc[i]]
        for j in range(i + 1, L):
            around = min(j - i, L - (j - i))
            if di[cyc[j]] != around:
                return False
    return True


def _cycle_search(g: Graph, target: int | None) -> list[int] | None:
    """Backtracking core shared by circumference and cycle_at_least.

    target=None finds a longest cycle (lexicographically smallest witness
    among the longest); target=L returns the first cycle of length >= L.
    """
    n = g.n
    rows = g.bitrows
    best_len = 2
    best_seq: list[int] | None = None
    for root in range(n):
        remaining = n - root
        if target is None:
            if remaining <= best_len:
                break
        elif remaining < target:
            break
        if rows[root].bit_count() < 2:
            continue
        rootbit = 1 << root
        gt_root = ~((rootbit << 1) - 1)
        path = [root]
        used = rootbit
        iters = [rows[root] & gt_root]
        while iters:
            m = iters[-1]
            if not m:
                iters.pop()
                used ^= 1 << path.pop()
                continue
            b = m & -m
            iters[-1] = m ^ b
            w = b.bit_length() - 1
            new_len = len(path) + 1
            if new_len >= 3 and rows[w] & rootbit and path[1] < w:
                if target is not None:
                    if new_len >= target:
                        return path + [w]
                elif new_len > best_len:
                    best_len = new_len
                    best_seq = path + [w]
            used_w = used | b
            # reachability bound: the rest of any cycle through w is a path
            # to root over unused vertices, so it stays inside this closure
            allowed = (gt_root & ~used_w) | rootbit
            frontier = rows[w] & allowed
            reach = 0
            while frontier:
                reach |= frontier
                nxt = 0
                mm = frontier
                while mm:
                    bb = mm & -mm
                    nxt |= rows[bb.bit_length() - 1]
                    mm ^= bb
                frontier = nxt & allowed & ~reach
            if not reach & rootbit:
                continue
            limit = new_len + (reach & ~rootbit).bit_count()
            if target is None:
                if limit <= best_len:
                    continue
            elif limit < target:
                continue
            ext = rows[w] & gt_root & ~used_w
            if not ext:
                continue
            path.append(w)
            used = used_w
            iters.append(ext)
    return best_seq


def _report(g: Graph, seq: Sequence[int]) -> CycleReport:
    cyc = tuple(_validate_cycle(g, seq))
    return CycleReport(cyc, len(cyc), is_geodesic_cycle(g, cyc))


def circumference(g: Graph) -> CycleReport | None:
    """Longest simple cycle with witness; None when g is a forest."""
    seq = _cycle_search(g, None)
    return None if seq is None else _report(g, seq)


def cycle_at_least(g: Graph, length: int) -> CycleReport | None:
    """First cycle of length >= ``length`` found, or None.

    Decision form of the circumference search; the witness need not be a
    longest cycle.
    """
    if length < 3:
        raise ValueError("cycle length bound must be at least 3")
    seq = _cycle_search(g, length)
    return None if seq is None else _report(g, seq)


def _geodesic_search(g: Graph, length: int, dist) -> list[int] | None:
    n = g.n
    rows = g.bitrows
    half = length // 2
    for v0 in range(n):
        dv0 = dist[v0]
        if max(dv0) < half:
            continue
        v0bit = 1 << v0
        gt_v0 = ~((v0bit << 1) - 1)
        path = [v0]
        used = v0bit
        iters = [rows[v0] & gt_v0]
        while iters:
            m = iters[-1]
            if not m:
                iters.pop()
                used ^= 1 << path.pop()
                continue
            b = m & -m
            iters[-1] = m ^ b
            w = b.bit_length() - 1
            pos = len(path)
            # the cyclic distance pattern is forced at every position, so a
            # violated prefix can never be completed
            ok = True
            for i in range(pos):
                gap = pos - i
                if dist[path[i]][w] != min(gap, length - gap):
                    ok = False
                    break
            if not ok:
                continue
            if pos == length - 1:
                if path[1] < w:
                    return path + [w]
                continue
            path.append(w)
            used |= b
            iters.append(rows[w] & gt_v0 & ~used)
    return None


def find_geodesic_cycle(g: Graph, length: int) -> CycleReport | None:
    """A geodesic cycle of exactly ``length``, or None if none exists."""
    if length < 3:
        raise ValueError("geodesic cycle length must be at least 3")
    if not is_connected(g):
        raise ValueError("geodesic cycle search requires a connected graph")
    if length > g.n:
        return None
    dist = distance_matrix(g)
    if max(max(row) for row in dist) < length // 2:
        return None
    seq = _geodesic_search(g, length, dist)
    if seq is None:
        return None
    rep = _report(g, seq)
    if not rep.geodesic:
        raise AssertionError("geodesic search produced a non-geodesic witness")
    return rep


def longest_geodesic_cycle(g: Graph) -> CycleReport | None:
    """Longest geodesic cycle; None exactly when g is a forest.

    Scans lengths downward from min(circumference, 2*diameter + 1).  A
    shortest cycle of the graph is always geodesic, so a cyclic graph always
    yields a witness.  Worst-case cost is exponential in the graph size.
    """
    longest = _cycle_search(g, None)
    if longest is None:
        return None
    diameter = metric_profile(g).diameter
    dist = distance_matrix(g)
    for length in range(min(len(longest), 2 * diameter + 1), 2, -1):
        seq = _geodesic_search(g, length, dist)
        if seq is not None:
            rep = _report(g, seq)
            if not rep.geodesic:
                raise AssertionError("geodesic search produced a non-geodesic witness")
            return rep
    return None


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (as edge sets) and cut-vertices via iterative low-link DFS.

    Blocks are ordered by their smallest edge; edges inside a block are
    sorted.  Requires a connected graph.
    """
    if not is_connected(g):
        raise ValueError("block decomposition requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cut: set[int] = set()
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    stack: list[tuple[int, int, object]] = [(0, -1, iter(g.neighbors[0]))]
    while stack:
        u, pu, it = stack[-1]
        advanced = False
        for v in it:
            if v == pu:
                continue
            if disc[v] == -1:
                edge_stack.append((u, v))
                disc[v] = low[v] = timer
                timer += 1
                if u == 0:
                    root_children += 1
                stack.append((v, u, iter(g.neighbors[v])))
                advanced = True
                break
            if disc[v] < disc[u]:
                edge_stack.append((u, v))
                if disc[v] < low[u]:
                    low[u] = disc[v]
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        if low[u] < low[p]:
            low[p] = low[u]
        if low[u] >= disc[p]:
            block = []
            while True:
                e = edge_stack.pop()
                block.append(e)
                if e == (p, u):
                    break
            raw_blocks.append(block)
            if p != 0:
                cut.add(p)
    if root_children >= 2:
        cut.add(0)
    blocks = sorted(tuple(sorted((min(a, b), max(a, b)) for a, b in blk)) for blk in raw_blocks)
    return BlockDecomposition(tuple(blocks), frozenset(cut))
