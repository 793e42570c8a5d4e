"""Simple undirected graphs on dense vertex ids with graph6 interchange.

Vertices are the integers 0..n-1 and neighbor sets are stored as integer
bitmasks, so membership tests are O(1) and iteration is always in ascending
vertex order.  Graph values are immutable: every mutating operation returns
a new graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "new_graph",
    "add_edge",
    "degree",
    "is_connected",
    "connected_components",
    "induced_subgraph",
    "disjoint_union",
    "parse_graph6",
    "to_graph6",
]

_GRAPH6_MAX_N = (1 << 36) - 1


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph; build via `new_graph`/`from_edges`."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        return _iter_bits(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for k in _iter_bits(rest):
                out.append((u, u + 1 + k))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def new_graph(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return Graph(n, (0,) * n)


def add_edge(g: Graph, u: int, v: int) -> tuple[Graph, bool]:
    """Return (graph with edge {u,v}, True if the edge was newly added)."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u} is not allowed")
    g._check_vertex(u)
    g._check_vertex(v)
    if g.has_edge(u, v):
        return g, False
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj)), True


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    """Return the graph without edge {u,v} (which must be present)."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def _component_mask(g: Graph, start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    return _component_mask(g, 0) == (1 << g.n) - 1


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each ascending, ordered by minimum vertex."""
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        mask = _component_mask(g, start)
        comps.append(list(_iter_bits(mask)))
        remaining &= ~mask
    return comps


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertices, relabeled 0..k-1 in the given order."""
    vs = list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    if len(index) != len(vs):
        raise ValueError("duplicate vertices in induced_subgraph")
    edges = []
    for i, v in enumerate(vs):
        for w in _iter_bits(g.adj[v]):
            j = index.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    return Graph.from_edges(len(vs), edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 and g2 side by side; g2's vertex ids are shifted up by g1.n."""
    shift = g1.n
    adj = list(g1.adj) + [m << shift for m in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


# graph6 interchange, bit-exact per the standard format: 63-offset printable
# bytes, size header, then the upper adjacency triangle in column order
# (0,1), (0,2), (1,2), (0,3), ... packed big-endian six bits per byte.


def _parse_graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ValueError("empty graph6 input")
    if data[0] != 126:  # '~'
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise ValueError(f"invalid graph6 size byte {data[0]}")
        return n, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ValueError("truncated graph6 size header")
        n = 0
        for b in data[1:4]:
            if not 63 <= b <= 126:
                raise ValueError(f"invalid graph6 size byte {b}")
            n = (n << 6) | (b - 63)
        return n, 4
    if len(data) < 8:
        raise ValueError("truncated graph6 size header")
    n = 0
    for b in data[2:8]:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 size byte {b}")
        n = (n << 6) | (b - 63)
    return n, 8


def parse_graph6(text: bytes | str) -> Graph:
    """Decode one graph6 value (optionally prefixed with '>>graph6<<')."""
    if isinstance(text, str):
        data = text.strip().encode("ascii")
    else:
        data = bytes(text).strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if data.startswith(b":") or data.startswith(b";"):
        raise ValueError("sparse6 input is not supported; supply graph6")
    n, offset = _parse_graph6_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise ValueError("truncated graph6 body")
    if len(body) > nbytes:
        raise ValueError("trailing garbage after graph6 body")
    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 body byte {b}")
        bits = (bits << 6) | (b - 63)
    bits >>= 6 * nbytes - nbits  # drop padding
    edges = []
    pos = nbits
    for col in range(1, n):
        for row in range(col):
            pos -= 1
            if bits >> pos & 1:
                edges.append((row, col))
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (inverse of parse_graph6)."""
    n = g.n
    if n > _GRAPH6_MAX_N:
        raise ValueError(f"n={n} exceeds the graph6 size limit")
    if n <= 62:
        header = [n + 63]
    elif n <= 258047:
        header = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    else:
        header = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = 0
    nbits = n * (n - 1) // 2
    for col in range(1, n):
        for row in range(col):
            bits = (bits << 1) | (g.adj[row] >> col & 1)
    pad = (6 - nbits % 6) % 6
    bits <<= pad
    body = []
    for k in range(((nbits + pad) // 6) - 1, -1, -1):
        body.append((bits >> 6 * k & 63) + 63)
    return bytes(header + body).decode("ascii")
