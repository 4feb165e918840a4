"""Canonical labeling by individualization and refinement.

A coloring is refined until stable: a vertex signature combines its color
with the multiset of neighbor colors (packed into one integer, exact, no
hashing), and colors are reassigned by sorted signature rank.  When the
stable partition is not discrete, the search individualizes each vertex of
the first non-singleton cell in turn and recurses; the canonical form is
the lexicographically smallest adjacency encoding over all leaves.

Twin vertices (equal open or equal closed neighborhoods) are interchangeable
by an automorphism that fixes everything else, so only one representative
per twin class is branched on inside a cell.  Worst-case cost is still
exponential for highly regular graphs, which is acceptable at the sizes the
enumeration sweeps.
"""

from __future__ import annotations

from .graphs import Graph, _payload_to_ascii

_REV_LIMIT = 13
_REV: list[list[int]] = []


def _build_rev_tables():
    for width in range(_REV_LIMIT):
        table = [0] * (1 << width)
        for x in range(1 << width):
            r = 0
            for i in range(width):
                if x >> i & 1:
                    r |= 1 << (width - 1 - i)
            table[x] = r
        _REV.append(table)


_build_rev_tables()


def _rev_bits(x: int, width: int) -> int:
    if width < _REV_LIMIT:
        return _REV[width][x]
    r = 0
    for i in range(width):
        if x >> i & 1:
            r |= 1 << (width - 1 - i)
    return r


def _refine(n, rows, colors, ncolors, pow_table, base_shift):
    """Stabilize a coloring; cells only split, never merge, and the split
    order depends only on invariant signature values."""
    while ncolors < n:
        sigs = [0] * n
        for v in range(n):
            m = rows[v]
            s = colors[v] << base_shift
            while m:
                b = m & -m
                s += pow_table[colors[b.bit_length() - 1]]
                m ^= b
            sigs[v] = s
        order = sorted(set(sigs))
        if len(order) == ncolors:
            break
        rank = {s: i for i, s in enumerate(order)}
        colors = [rank[s] for s in sigs]
        ncolors = len(order)
    return colors, ncolors


def _twin_reps(n, rows):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key_of in (lambda v: rows[v], lambda v: rows[v] | (1 << v)):
        seen: dict[int, int] = {}
        for v in range(n):
            k = key_of(v)
            if k in seen:
                a, b = find(seen[k]), find(v)
                if a != b:
                    parent[b] = a
            else:
                seen[k] = v
    return [find(v) for v in range(n)]


def _encode(n, rows, colors):
    inv = [0] * n
    for v in range(n):
        inv[colors[v]] = v
    acc = 0
    for j in range(1, n):
        m = rows[inv[j]]
        p = 0
        while m:
            b = m & -m
            c = colors[b.bit_length() - 1]
            if c < j:
                p |= 1 << c
            m ^= b
        acc = (acc << j) | _rev_bits(p, j)
    return acc


def _canon_code(n, rows) -> int:
    """Upper-triangle bit accumulator of the canonical relabeling."""
    if n == 1:
        return 0
    width = n.bit_length() + 1
    pow_table = [1 << (width * c) for c in range(n)]
    base_shift = width * n
    degs = [r.bit_count() for r in rows]
    order = sorted(set(degs))
    rank = {d: i for i, d in enumerate(order)}
    colors = [rank[d] for d in degs]
    colors, ncolors = _refine(n, rows, colors, len(order), pow_table, base_shift)
    if ncolors == n:
        return _encode(n, rows, colors)
    twin = _twin_reps(n, rows)
    best = None
    stack = [(colors, ncolors)]
    while stack:
        cols, k = stack.pop()
        if k == n:
            code = _encode(n, rows, cols)
            if best is None or code < best:
                best = code
            continue
        counts = [0] * k
        for c in cols:
            counts[c] += 1
        target = 0
        while counts[target] < 2:
            target += 1
        seen_classes = set()
        for v in range(n):
            if cols[v] != target:
                continue
            t = twin[v]
            if t in seen_classes:
                continue
            seen_classes.add(t)
            c2 = [c * 2 + 1 for c in cols]
            c2[v] -= 1
            order2 = sorted(set(c2))
            rank2 = {x: i for i, x in enumerate(order2)}
            c2 = [rank2[x] for x in c2]
            c2, k2 = _refine(n, rows, c2, len(order2), pow_table, base_shift)
            stack.append((c2, k2))
    return best


def _canon_rows_g6(n, rows) -> str:
    if n == 1:
        return "@"
    nbits = n * (n - 1) // 2
    return chr(n + 63) + _payload_to_ascii(_canon_code(n, rows), nbits)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 string: equal for isomorphic graphs, distinct otherwise."""
    return _canon_rows_g6(g.n, g.bitrows)
