"""Builders for the named graph families and path-partition machinery.

Everything here is deterministic: path vertices are laid out consecutively
within each part, parts come in non-increasing order, and the two dominating
vertices of a join always receive the two highest ids, so graph6 output is
stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .graphs import Graph, disjoint_union

__all__ = [
    "PathPartition",
    "ForbiddenPattern",
    "enumerate_partitions",
    "path",
    "cycle",
    "h_partition",
    "realize_partition",
    "join_k2",
    "k2_bipartite",
    "k2_plus",
    "cll_pattern",
    "theta_family",
    "transform",
    "extremal_construction",
]


@dataclass(frozen=True)
class PathPartition:
    """Non-increasing sequence of path orders (every part >= 1)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        if any(p < 1 for p in parts):
            raise ValueError("path partition parts must be >= 1")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "PathPartition":
        try:
            parts = tuple(int(tok) for tok in text.split(",") if tok.strip())
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        if not parts:
            raise ValueError("empty partition text")
        return cls(parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """i-th largest part, or 0 when fewer than i+1 parts exist."""
        return self.parts[i] if i < len(self.parts) else 0

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def text(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def enumerate_partitions(total: int, max_part: int | None = None) -> Iterator[PathPartition]:
    """All partitions of `total` in reverse-lexicographic order, largest part first."""
    if total < 1:
        raise ValueError("total must be >= 1")
    cap = total if max_part is None else min(max_part, total)
    if cap < 1:
        raise ValueError("max_part must be >= 1")

    def rec(remaining: int, bound: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for first in range(min(bound, remaining), 0, -1):
            prefix.append(first)
            yield from rec(remaining - first, first, prefix)
            prefix.pop()

    for parts in rec(total, cap, []):
        yield PathPartition(parts)


def path(k: int) -> Graph:
    """Path on k vertices v0..v(k-1)."""
    if k < 1:
        raise ValueError("path order must be >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    """Cycle on k vertices."""
    if k < 3:
        raise ValueError("cycle order must be >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def h_partition(n: int, n1: int, n2: int) -> PathPartition:
    """Partition of n-2 into one part n1, copies of n2 and a remainder part.

    This is the abstract form of the host built from one longest path plus
    as many n2-paths as fit; the leftover vertices form one shorter path.
    """
    if n2 < 1:
        raise ValueError("n2 must be >= 1")
    if n2 > n1:
        raise ValueError("n1 must be >= n2")
    if n - 2 < n1:
        raise ValueError(f"need n - 2 >= n1, got n={n}, n1={n1}")
    q, r = divmod(n - 2 - n1, n2)
    parts = [n1] + [n2] * q
    if r:
        parts.append(r)
    return PathPartition(tuple(parts))


def realize_partition(p: PathPartition) -> Graph:
    """Disjoint union of paths with the partition's orders."""
    g = Graph(0, ())
    for k in p.parts:
        g = disjoint_union(g, path(k))
    return g


def join_k2(h: Graph) -> Graph:
    """Full join of an adjacent dominating pair onto h.

    The two new vertices get the highest ids, are adjacent to each other and
    to every vertex of h.
    """
    if h.n == 0:
        raise ValueError("cannot join onto the empty graph")
    n = h.n + 2
    u1, u2 = h.n, h.n + 1
    edges = h.edges()
    edges.append((u1, u2))
    edges.extend((v, u1) for v in range(h.n))
    edges.extend((v, u2) for v in range(h.n))
    return Graph.from_edges(n, edges)


def k2_bipartite(n: int) -> Graph:
    """Complete bipartite graph with sides of size 2 and n-2; the 2-side takes the top ids."""
    if n < 3:
        raise ValueError("need n >= 3")
    u1, u2 = n - 2, n - 1
    edges = [(v, u1) for v in range(n - 2)] + [(v, u2) for v in range(n - 2)]
    return Graph.from_edges(n, edges)


def k2_plus(n: int) -> Graph:
    """k2_bipartite(n) plus one edge inside the large side, between ids 0 and 1."""
    if n < 4:
        raise ValueError("need n >= 4")
    g = k2_bipartite(n)
    return Graph.from_edges(n, g.edges() + [(0, 1)])


def cll_pattern(l: int) -> Graph:
    """Two cycles of length l sharing exactly one vertex (vertex 0); 2l-1 vertices."""
    if l < 3:
        raise ValueError("cycle length must be >= 3")
    edges = [(i, i + 1) for i in range(l - 1)] + [(l - 1, 0)]
    second = [0] + list(range(l, 2 * l - 1))
    edges += [(second[i], second[i + 1]) for i in range(l - 1)] + [(second[-1], 0)]
    return Graph.from_edges(2 * l - 1, edges)


def theta_family(k: int) -> list[Graph]:
    """All two-cycles-sharing-one-edge graphs on k vertices, smaller cycle first.

    Member a (for a = 3 .. floor(k/2)+1) amalgamates a cycle of length a and
    one of length k+2-a along the shared edge {0, 1}; each member has k
    vertices and k+1 edges.
    """
    if k < 4:
        raise ValueError("need k >= 4")
    members = []
    for a in range(3, k // 2 + 2):
        b = k + 2 - a
        edges = [(0, 1)]
        ring_a = [0, 1] + list(range(2, a))
        edges += [(ring_a[i], ring_a[i + 1]) for i in range(1, a - 1)] + [(ring_a[-1], 0)]
        ring_b = [0, 1] + list(range(a, a + b - 2))
        edges += [(ring_b[i], ring_b[i + 1]) for i in range(1, b - 1)] + [(ring_b[-1], 0)]
        members.append(Graph.from_edges(k, edges))
    return members


def transform(p: PathPartition, s1: int, s2: int) -> PathPartition:
    """Replace parts {s1, s2} by {s1+1, s2-1} (s2 dropped entirely when s2 = 1)."""
    if s2 > s1:
        raise ValueError("need s1 >= s2")
    if s2 < 1:
        raise ValueError("need s2 >= 1")
    counts = p.counts()
    needed = 2 if s1 == s2 else 1
    if counts.get(s1, 0) < needed or counts.get(s2, 0) < (2 if s1 == s2 else 1):
        raise ValueError(f"partition {p.parts} lacks distinct parts {s1} and {s2}")
    parts = list(p.parts)
    parts.remove(s1)
    parts.remove(s2)
    parts.append(s1 + 1)
    if s2 >= 2:
        parts.append(s2 - 1)
    return PathPartition(tuple(parts))


@dataclass(frozen=True)
class ForbiddenPattern:
    """Tagged forbidden-subgraph choice: double cycle, Theta family, or explicit graph."""

    kind: str
    order: int = 0
    graph: Graph | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind == "cll":
            if self.order < 3:
                raise ValueError("cll pattern needs l >= 3")
        elif self.kind == "theta":
            if self.order < 4:
                raise ValueError("theta pattern needs k >= 4")
        elif self.kind == "explicit":
            if self.graph is None:
                raise ValueError("explicit pattern needs a graph")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @classmethod
    def cll(cls, l: int) -> "ForbiddenPattern":
        return cls("cll", l)

    @classmethod
    def theta(cls, k: int) -> "ForbiddenPattern":
        return cls("theta", k)

    @classmethod
    def explicit(cls, g: Graph) -> "ForbiddenPattern":
        return cls("explicit", 0, g)

    @classmethod
    def parse(cls, text: str) -> "ForbiddenPattern":
        """Parse 'cll:L' or 'theta:K'."""
        kind, sep, num = text.partition(":")
        if not sep or kind not in ("cll", "theta"):
            raise ValueError(f"cannot parse pattern {text!r}; expected cll:L or theta:K")
        try:
            order = int(num)
        except ValueError:
            raise ValueError(f"bad pattern order in {text!r}") from None
        return cls(kind, order)

    def label(self) -> str:
        if self.kind == "explicit":
            g = self.graph
            return f"explicit:{g.n}v{g.edge_count}e"
        return f"{self.kind}:{self.order}"

    def member_graphs(self) -> list[Graph]:
        if self.kind == "cll":
            return [cll_pattern(self.order)]
        if self.kind == "theta":
            return theta_family(self.order)
        return [self.graph]


def extremal_construction(pattern: ForbiddenPattern, n: int) -> Graph:
    """The conjectured maximum-spectral-radius graph for the pattern at order n."""
    if pattern.kind == "cll":
        l = pattern.order
        if l == 3:
            n1 = n2 = 1
        else:
            n1 = n2 = l - 2
        return join_k2(realize_partition(h_partition(n, n1, n2)))
    if pattern.kind == "theta":
        k = pattern.order
        if k == 4:
            return k2_bipartite(n)
        n1 = math.ceil((k - 3) / 2)
        n2 = (k - 3) // 2
        return join_k2(realize_partition(h_partition(n, n1, n2)))
    raise ValueError("no extremal construction for explicit patterns")
