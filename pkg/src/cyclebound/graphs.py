"""Immutable simple undirected graphs with graph6 serialization.

Vertices are dense integers 0..n-1.  Adjacency is stored twice: as bitmask
rows (fast membership tests and set algebra) and as sorted neighbor tuples
(cache-friendly traversal).  Both views are built once and never mutated.
"""

from __future__ import annotations

from typing import Iterable, Sequence

GRAPH6_MAX_N = 62  # single-byte size field only


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position when known."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable and hashable; all operations on them are pure
    functions, so graphs are safe to share freely across threads.
    """

    __slots__ = ("n", "bitrows", "neighbors")

    def __init__(self, n: int, bitrows: Sequence[int]):
        if n < 1:
            raise ValueError("graph must have at least one vertex")
        if len(bitrows) != n:
            raise ValueError("bitrows length must equal vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(bitrows):
            if row & ~full:
                raise ValueError(f"adjacency row of vertex {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(bitrows):
            m = row
            while m:
                b = m & -m
                u = b.bit_length() - 1
                if not bitrows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
                m ^= b
        self.n = n
        self.bitrows = tuple(bitrows)
        self.neighbors = tuple(_bits(row) for row in self.bitrows)

    # Graph is conceptually frozen; block accidental mutation.
    def __setattr__(self, name, value):
        if hasattr(self, "neighbors"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.bitrows == other.bitrows

    def __hash__(self):
        return hash((self.n, self.bitrows))

    def __repr__(self):
        if self.n <= GRAPH6_MAX_N:
            return f"Graph({self.n}, {to_graph6(self)!r})"
        return f"Graph({self.n}, edges={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.bitrows) // 2

    def degree(self, v: int) -> int:
        return self.bitrows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bitrows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for v in range(self.n):
            m = self.bitrows[v] >> (v + 1) << (v + 1)
            while m:
                b = m & -m
                out.append((v, b.bit_length() - 1))
                m ^= b
        return out


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Rejects self-loops and endpoints outside 0..n-1.
    """
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def is_connected(g: Graph) -> bool:
    """True iff one BFS from vertex 0 reaches every vertex."""
    full = (1 << g.n) - 1
    seen = frontier = 1
    rows = g.bitrows
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= rows[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def permute(g: Graph, sigma: Sequence[int]) -> Graph:
    """Relabel: edge (u, v) maps to (sigma[u], sigma[v])."""
    n = g.n
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise ValueError("sigma is not a permutation of 0..n-1")
    rows = [0] * n
    for v in range(n):
        m = g.bitrows[v]
        new = 0
        while m:
            b = m & -m
            new |= 1 << sigma[b.bit_length() - 1]
            m ^= b
        rows[sigma[v]] = new
    return Graph(n, rows)


# graph6: size byte chr(n+63), then the upper-triangle bits in column order
# (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),... zero-padded to a multiple of six,
# each 6-bit group emitted as chr(value+63).

_HEADER = ">>graph6<<"


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optional '>>graph6<<' prefix allowed)."""
    if isinstance(text, bytes):
        try:
            s = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 input", exc.start) from None
    else:
        s = text
    s = s.rstrip("\r\n")
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    size = ord(s[0]) - 63
    if size == 63:
        raise Graph6Error("extended multi-byte size encoding not supported", 0)
    if not 1 <= size <= GRAPH6_MAX_N:
        raise Graph6Error(f"bad size byte {s[0]!r}", 0)
    nbits = size * (size - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 < nbytes:
        raise Graph6Error(f"truncated bit field, need {nbytes} data bytes", len(s))
    if len(s) - 1 > nbytes:
        raise Graph6Error("trailing bytes after bit field", 1 + nbytes)
    acc = 0
    for idx in range(1, len(s)):
        val = ord(s[idx]) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"character {s[idx]!r} outside graph6 range", idx)
        acc = acc << 6 | val
    pad = nbytes * 6 - nbits
    if pad and acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    acc >>= pad
    rows = [0] * size
    pos = nbits - 1
    for j in range(1, size):
        for i in range(j):
            if acc >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(size, rows)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 line (no header, no newline)."""
    if g.n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 size field supports at most {GRAPH6_MAX_N} vertices")
    acc = 0
    for j in range(1, g.n):
        row = g.bitrows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
    nbits = g.n * (g.n - 1) // 2
    return chr(g.n + 63) + _payload_to_ascii(acc, nbits)


def _payload_to_ascii(acc: int, nbits: int) -> str:
    """Pack a bit accumulator (first pair bit most significant) into graph6 bytes."""
    pad = (-nbits) % 6
    acc <<= pad
    total = nbits + pad
    chars = []
    for shift in range(total - 6, -1, -6):
        chars.append(chr((acc >> shift & 63) + 63))
    return "".join(chars)
