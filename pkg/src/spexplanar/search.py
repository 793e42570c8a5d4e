"""Extremal searches: partition-family ranking and exhaustive small-order search.

The exhaustive mode enumerates connected graphs up to isomorphism by vertex
augmentation with canonical-form deduplication (individualization-refinement
certificates).  Every ranking is deterministic: candidates are sorted by
spectral radius and near-ties are ordered by their graph6 string.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable

from .families import (
    ForbiddenPattern,
    PathPartition,
    enumerate_partitions,
    extremal_construction,
    h_partition,
    join_k2,
    realize_partition,
    transform,
)
from .freeness import contains_subgraph, join_free_condition
from .graphs import Graph, is_connected, parse_graph6, to_graph6
from .planarity import is_planar
from .spectral import (
    DEFAULT_GAP_TOL,
    DEFAULT_TOL,
    Comparison,
    compare_rho,
    rho_closed_k2n2,
    spectral_radius,
)

__all__ = [
    "RankedCandidate",
    "SearchReport",
    "AscentMove",
    "AscentReport",
    "enumerate_partitions",
    "canonical_form",
    "canonical_graph",
    "enumerate_connected_graphs",
    "family_search",
    "exhaustive_search",
    "verify_transformation_ascent",
]

INTERNAL_ENUMERATION_CAP = 8


# -- canonical forms ---------------------------------------------------------


def _refine_colors(n: int, adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Stable neighborhood-color refinement with id-independent color names."""
    while True:
        sigs = []
        for v in range(n):
            mask = adj[v]
            ncols = []
            while mask:
                low = mask & -mask
                ncols.append(colors[low.bit_length() - 1])
                mask ^= low
            ncols.sort()
            sigs.append((colors[v], tuple(ncols)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism certificate: (n, minimal relabeled edge mask).

    Branches on every vertex of the first non-singleton refinement cell, so
    the certificate is invariant under relabeling.  Intended for small n.
    """
    n = g.n
    if n <= 1:
        return (n, 0)
    adj = g.adj
    best: int | None = None

    def leaf(colors: list[int]) -> None:
        nonlocal best
        mask = 0
        for u in range(n):
            rest = adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    a, b = colors[u], colors[v]
                    if a > b:
                        a, b = b, a
                    mask |= 1 << (a * n + b)
                rest >>= 1
                v += 1
        if best is None or mask < best:
            best = mask

    def descend(colors: list[int]) -> None:
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            leaf(colors)
            return
        for v in range(n):
            if colors[v] == target:
                split = [2 * c for c in colors]
                split[v] -= 1
                descend(_refine_colors(n, adj, split))

    descend(_refine_colors(n, adj, [0] * n))
    return (n, best)


def canonical_graph(g: Graph) -> Graph:
    """Canonically labeled copy of g."""
    n, mask = canonical_form(g)
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            if mask >> (a * n + b) & 1:
                edges.append((a, b))
    return Graph.from_edges(n, edges)


_CONNECTED_CACHE: dict[int, list[Graph]] = {}


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, canonically labeled.

    Built by attaching a new vertex to every non-empty subset of each smaller
    graph and deduplicating by certificate; every connected graph has a
    non-cut vertex, so every class is reached.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n in _CONNECTED_CACHE:
        return _CONNECTED_CACHE[n]
    if n == 1:
        reps = [Graph.from_edges(1, [])]
    else:
        found: dict[tuple[int, int], Graph] = {}
        for base in enumerate_connected_graphs(n - 1):
            base_edges = base.edges()
            for subset in range(1, 1 << (n - 1)):
                edges = list(base_edges)
                mask = subset
                while mask:
                    low = mask & -mask
                    edges.append((low.bit_length() - 1, n - 1))
                    mask ^= low
                cand = Graph.from_edges(n, edges)
                cert = canonical_form(cand)
                if cert not in found:
                    found[cert] = canonical_graph(cand)
        reps = [found[c] for c in sorted(found)]
    _CONNECTED_CACHE[n] = reps
    return reps


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class RankedCandidate:
    partition: str | None
    graph6: str
    rho: float
    residual: float


@dataclass(frozen=True)
class SearchReport:
    mode: str
    n: int
    pattern: str
    source: str
    ranked: tuple[RankedCandidate, ...]
    gap_flags: tuple[str, ...]
    candidate_count: int
    admitted_count: int
    expected_extremal: str | None
    matches_theorem_extremal: bool | None
    comparison: dict | None
    diagnostics: tuple[str, ...]
    elapsed_seconds: float

    def to_dict(self, include_timing: bool = True) -> dict:
        """JSON-ready dict with fixed field order; timing is the only
        non-deterministic field and can be dropped for byte-stable output."""
        out = {
            "mode": self.mode,
            "n": self.n,
            "pattern": self.pattern,
            "source": self.source,
            "ranked": [
                {
                    "rank": i + 1,
                    "partition": c.partition,
                    "graph6": c.graph6,
                    "rho": c.rho,
                    "residual": c.residual,
                }
                for i, c in enumerate(self.ranked)
            ],
            "gap_flags": list(self.gap_flags),
            "candidate_count": self.candidate_count,
            "admitted_count": self.admitted_count,
            "expected_extremal": self.expected_extremal,
            "matches_theorem_extremal": self.matches_theorem_extremal,
            "comparison": self.comparison,
            "diagnostics": list(self.diagnostics),
        }
        if include_timing:
            out["elapsed_seconds"] = self.elapsed_seconds
        return out


def _rho_entry(args: tuple[tuple[int, ...] | None, tuple[int, ...], int, float]) -> tuple[float, float]:
    parts, adj, n, tol = args
    g = Graph(n, adj)
    r = spectral_radius(g, tol)
    return r.rho, r.residual


def _evaluate(graphs: list[Graph], tol: float, jobs: int) -> list[tuple[float, float]]:
    if jobs <= 1 or len(graphs) < 4:
        out = []
        for g in graphs:
            r = spectral_radius(g, tol)
            out.append((r.rho, r.residual))
        return out
    args = [(None, g.adj, g.n, tol) for g in graphs]
    with Pool(jobs) as pool:
        return pool.map(_rho_entry, args)


def _rank(entries: list[RankedCandidate], gap_tol: float) -> list[RankedCandidate]:
    entries = sorted(entries, key=lambda c: (-c.rho, c.graph6))
    out: list[RankedCandidate] = []
    i = 0
    while i < len(entries):
        j = i + 1
        while j < len(entries) and entries[j - 1].rho - entries[j].rho <= gap_tol:
            j += 1
        out.extend(sorted(entries[i:j], key=lambda c: c.graph6))
        i = j
    return out


def _gap_flags(ranked: list[RankedCandidate], gap_tol: float) -> tuple[str, ...]:
    return tuple(
        "strict" if ranked[i].rho - ranked[i + 1].rho > gap_tol else "indistinguishable"
        for i in range(len(ranked) - 1)
    )


def _theorem_partition(pattern: ForbiddenPattern, n: int) -> PathPartition:
    if pattern.kind == "cll":
        s = 1 if pattern.order == 3 else pattern.order - 2
        return h_partition(n, s, s)
    k = pattern.order
    return h_partition(n, (k - 3 + 1) // 2, (k - 3) // 2)


def family_search(pattern: ForbiddenPattern, n: int, top_k: int = 3,
                  gap_tol: float = DEFAULT_GAP_TOL, tol: float = DEFAULT_TOL,
                  jobs: int = 1) -> SearchReport:
    """Rank all freeness-admissible dominating-pair joins of path unions of order n.

    The arithmetic freeness condition bounds the parts, so enumeration stays
    polynomial in n for a fixed pattern.
    """
    start = time.perf_counter()
    if pattern.kind == "theta" and pattern.order == 4:
        raise ValueError(
            "theta:4 extremal graph is complete bipartite, not a join of paths; "
            "compare against rho_closed_k2n2 instead"
        )
    if pattern.kind == "explicit":
        raise ValueError("family search needs a cll or theta pattern")
    if n < 3:
        raise ValueError("need n >= 3")
    if pattern.kind == "cll":
        max_part = 1 if pattern.order == 3 else 2 * pattern.order - 4
    else:
        max_part = pattern.order - 3
    candidate_count = 0
    admitted: list[PathPartition] = []
    for p in enumerate_partitions(n - 2, min(max_part, n - 2)):
        candidate_count += 1
        if join_free_condition(pattern, p):
            admitted.append(p)
    graphs = [join_k2(realize_partition(p)) for p in admitted]
    values = _evaluate(graphs, tol, jobs)
    entries = [
        RankedCandidate(p.text(), to_graph6(g), rho, res)
        for p, g, (rho, res) in zip(admitted, graphs, values)
    ]
    ranked = _rank(entries, gap_tol)
    flags = _gap_flags(ranked, gap_tol)
    expected = _theorem_partition(pattern, n).text()
    matches = bool(ranked) and ranked[0].partition == expected
    return SearchReport(
        mode="family",
        n=n,
        pattern=pattern.label(),
        source="internal",
        ranked=tuple(ranked[:top_k]),
        gap_flags=flags[: max(len(ranked[:top_k]) - 1, 0)],
        candidate_count=candidate_count,
        admitted_count=len(admitted),
        expected_extremal=expected,
        matches_theorem_extremal=matches,
        comparison=None,
        diagnostics=(),
        elapsed_seconds=time.perf_counter() - start,
    )


def exhaustive_search(n: int, pattern: ForbiddenPattern, source: str = "internal",
                      graph6_lines: Iterable[str] | None = None,
                      trust_planar: bool = False, strict: bool = True,
                      top_k: int = 5, gap_tol: float = DEFAULT_GAP_TOL,
                      tol: float = DEFAULT_TOL, jobs: int = 1) -> SearchReport:
    """Maximum-spectral-radius search over pattern-free planar graphs of order n.

    Internal mode enumerates isomorphism classes (n <= 8); stream mode filters
    externally supplied graph6 lines.  `trust_planar` skips the planarity
    re-check for streams that come from a planar-graph generator.
    """
    start = time.perf_counter()
    members = pattern.member_graphs()
    diagnostics: list[str] = []
    if source == "internal":
        if n > INTERNAL_ENUMERATION_CAP:
            raise ValueError(
                f"internal enumeration is capped at n <= {INTERNAL_ENUMERATION_CAP}; "
                "stream externally generated graph6 instead"
            )
        candidates = enumerate_connected_graphs(n)
        check_planar = True
    elif source == "stream":
        if graph6_lines is None:
            raise ValueError("stream mode needs graph6 lines")
        candidates = []
        for lineno, raw in enumerate(graph6_lines, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
                if g.n != n:
                    raise ValueError(f"graph order {g.n} does not match requested n={n}")
            except ValueError as exc:
                if strict:
                    raise ValueError(f"stream line {lineno}: {exc}") from None
                diagnostics.append(f"line {lineno} skipped: {exc}")
                continue
            candidates.append(g)
        check_planar = not trust_planar
    else:
        raise ValueError(f"unknown source {source!r}")

    admitted: list[Graph] = []
    for g in candidates:
        if source == "stream" and not is_connected(g):
            continue
        if check_planar and not is_planar(g):
            continue
        if any(contains_subgraph(g, m) for m in members):
            continue
        admitted.append(g)
    values = _evaluate(admitted, tol, jobs)
    entries = [
        RankedCandidate(None, to_graph6(g), rho, res)
        for g, (rho, res) in zip(admitted, values)
    ]
    ranked = _rank(entries, gap_tol)
    flags = _gap_flags(ranked, gap_tol)

    comparison = None
    if pattern.kind == "theta" and pattern.order == 4 and n >= 3:
        comparison = {
            "construction": "k2_bipartite",
            "graph6": to_graph6(extremal_construction(pattern, n)),
            "rho_closed_form": rho_closed_k2n2(n),
        }
    expected = None
    matches = None
    if n <= INTERNAL_ENUMERATION_CAP and ranked:
        try:
            construction = extremal_construction(pattern, n)
        except ValueError:
            construction = None
        if construction is not None:
            expected = to_graph6(canonical_graph(construction))
            top = canonical_form(parse_graph6(ranked[0].graph6))
            matches = top == canonical_form(construction)
    return SearchReport(
        mode="exhaustive",
        n=n,
        pattern=pattern.label(),
        source=source,
        ranked=tuple(ranked[:top_k]),
        gap_flags=flags[: max(len(ranked[:top_k]) - 1, 0)],
        candidate_count=len(candidates),
        admitted_count=len(admitted),
        expected_extremal=expected,
        matches_theorem_extremal=matches,
        comparison=comparison,
        diagnostics=tuple(diagnostics),
        elapsed_seconds=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class AscentMove:
    s1: int
    s2: int
    parts: tuple[int, ...]
    ordering: str
    rho_base: float
    rho_new: float


@dataclass(frozen=True)
class AscentReport:
    pattern: str
    n: int
    base: tuple[int, ...]
    rho_base: float
    moves: tuple[AscentMove, ...]
    is_local_maximum: bool

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "n": self.n,
            "base": list(self.base),
            "rho_base": self.rho_base,
            "moves": [
                {
                    "s1": m.s1,
                    "s2": m.s2,
                    "parts": list(m.parts),
                    "ordering": m.ordering,
                    "rho_base": m.rho_base,
                    "rho_new": m.rho_new,
                }
                for m in self.moves
            ],
            "is_local_maximum": self.is_local_maximum,
        }


def verify_transformation_ascent(p: PathPartition, pattern: ForbiddenPattern, n: int,
                                 gap_tol: float = DEFAULT_GAP_TOL,
                                 tol: float = DEFAULT_TOL) -> AscentReport:
    """Apply every freeness-preserving path-shift move to p and compare radii.

    Moves that break the freeness condition are excluded.  The base partition
    is a local maximum when no admissible move strictly raises the radius.
    """
    if p.total != n - 2:
        raise ValueError(f"partition total {p.total} does not match n-2={n - 2}")
    if not join_free_condition(pattern, p):
        raise ValueError("base partition does not satisfy the freeness condition")
    base_graph = join_k2(realize_partition(p))
    rho_base = spectral_radius(base_graph, tol).rho
    counts = p.counts()
    values = sorted(counts, reverse=True)
    moves: list[AscentMove] = []
    for i, s1 in enumerate(values):
        for s2 in values[i:]:
            if s1 == s2 and counts[s1] < 2:
                continue
            q = transform(p, s1, s2)
            if not join_free_condition(pattern, q):
                continue
            new_graph_ = join_k2(realize_partition(q))
            ordering = compare_rho(new_graph_, base_graph, gap_tol)
            rho_new = spectral_radius(new_graph_, tol).rho
            moves.append(AscentMove(s1, s2, q.parts, ordering.value, rho_base, rho_new))
    is_local_max = all(m.ordering != Comparison.GREATER.value for m in moves)
    return AscentReport(pattern.label(), n, p.parts, rho_base, tuple(moves), is_local_max)
