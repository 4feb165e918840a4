"""Isomorph-free generation of connected graphs, plus graph6 stream input.

Level n is built from level n-1: every representative is extended by one
new vertex joined to a nonempty subset of the old vertices (every connected
graph has a non-cut vertex, so each class on n vertices arises this way),
and the results are deduplicated by canonical form.  Extension subsets that
differ only in which members of a twin class they pick yield isomorphic
children, so only one subset per twin signature is tried.

Generated levels are cached per process and emitted in sorted order, which
makes the output deterministic regardless of worker count.
"""

from __future__ import annotations

import os
from itertools import product
from multiprocessing import Pool
from typing import Iterable, Iterator

from .canon import _canon_rows_g6, _twin_reps
from .graphs import Graph, Graph6Error, parse_graph6

GUARANTEED_N = 9
MAX_GENERATED_N = 10  # best-effort at 10; the dedup set is the limit

_LEVELS: dict[int, tuple[str, ...]] = {1: ("@",)}


def worker_count() -> int:
    """Worker cap from CYCLEBOUND_THREADS, else available parallelism."""
    env = os.environ.get("CYCLEBOUND_THREADS")
    if env:
        try:
            w = int(env)
        except ValueError:
            raise ValueError(f"CYCLEBOUND_THREADS must be an integer, got {env!r}") from None
        return max(1, w)
    return max(1, os.cpu_count() or 1)


class GraphStream(Iterator[Graph]):
    """Ordered source of graphs with a provenance tag and a consumed count."""

    def __init__(self, items: Iterable[Graph], source: str):
        self._iter = iter(items)
        self.source = source
        self.count = 0

    def __iter__(self):
        return self

    def __next__(self) -> Graph:
        g = next(self._iter)
        self.count += 1
        return g


def _expand_parent(g6: str) -> set[str]:
    """Canonical forms of all one-vertex extensions of one representative."""
    g = parse_graph6(g6)
    n = g.n
    rows = g.bitrows
    newbit = 1 << n
    reps = _twin_reps(n, rows)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(reps[v], []).append(v)
    prefix_masks = []
    for members in classes.values():
        acc = 0
        masks = [0]
        for v in members:
            acc |= 1 << v
            masks.append(acc)
        prefix_masks.append(masks)
    out: set[str] = set()
    child_n = n + 1
    for picks in product(*[range(len(pm)) for pm in prefix_masks]):
        s = 0
        for pm, c in zip(prefix_masks, picks):
            s |= pm[c]
        if not s:
            continue
        child = [rows[i] | newbit if s >> i & 1 else rows[i] for i in range(n)]
        child.append(s)
        out.add(_canon_rows_g6(child_n, child))
    return out


def _expand_chunk(parents: tuple[str, ...]) -> set[str]:
    out: set[str] = set()
    for p in parents:
        out |= _expand_parent(p)
    return out


def connected_canonical_forms(n: int) -> tuple[str, ...]:
    """Sorted canonical graph6 strings of all connected graphs on n vertices."""
    if not 1 <= n <= MAX_GENERATED_N:
        raise ValueError(f"generation supports 1 <= n <= {MAX_GENERATED_N}, got {n}")
    for level in range(2, n + 1):
        if level in _LEVELS:
            continue
        parents = _LEVELS[level - 1]
        workers = worker_count()
        found: set[str] = set()
        if workers > 1 and len(parents) >= 4 * workers:
            chunks = [parents[i::4 * workers] for i in range(4 * workers)]
            with Pool(workers) as pool:
                for part in pool.imap_unordered(_expand_chunk, chunks):
                    found |= part
        else:
            for p in parents:
                found |= _expand_parent(p)
        _LEVELS[level] = tuple(sorted(found))
    return _LEVELS[n]


def enumerate_connected(n: int) -> GraphStream:
    """One representative per isomorphism class of connected n-vertex graphs."""
    forms = connected_canonical_forms(n)
    return GraphStream((parse_graph6(s) for s in forms), "generated")


def graphs_from_lines(lines: Iterable[str], source: str) -> GraphStream:
    """Parse graph6 lines; a malformed line aborts naming its line number."""

    def gen():
        for lineno, line in enumerate(lines, start=1):
            stripped = line.rstrip("\r\n")
            try:
                yield parse_graph6(stripped)
            except Graph6Error as exc:
                raise Graph6Error(f"{source}, line {lineno}: {exc.args[0]}") from None

    return GraphStream(gen(), source)


def read_graph6_stream(path) -> GraphStream:
    """Stream a file of one graph6 record per line."""

    def lines():
        with open(path, "rt", encoding="ascii") as fh:
            yield from fh

    return graphs_from_lines(lines(), str(path))
