"""Subgraph containment oracle and the structural freeness characterizations.

`contains_subgraph` is a plain backtracking search (not-necessarily-induced
embeddings) and serves as the ground truth the arithmetic conditions on path
partitions are validated against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import (
    ForbiddenPattern,
    PathPartition,
    cll_pattern,
    enumerate_partitions,
    join_k2,
    realize_partition,
    theta_family,
)
from .graphs import Graph, connected_components, induced_subgraph

__all__ = [
    "ForbiddenPattern",
    "JoinDecomposition",
    "AgreementReport",
    "contains_subgraph",
    "find_subgraph_embedding",
    "is_cll_free",
    "is_theta_free",
    "cll_join_free_condition",
    "c33_join_free_condition",
    "theta_join_free_condition",
    "join_free_condition",
    "decompose_join",
    "condition_oracle_agreement",
]


def _pattern_order(pattern: Graph) -> list[int]:
    """Deterministic vertex order: each vertex after the first maximizes the
    number of already-ordered neighbors (ties: higher degree, then lower id)."""
    n = pattern.n
    degs = pattern.degrees()
    placed: list[int] = []
    placed_set = 0
    while len(placed) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed_set >> v & 1:
                continue
            anchored = (pattern.adj[v] & placed_set).bit_count()
            key = (anchored, degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        placed.append(best)
        placed_set |= 1 << best
    return placed


def find_subgraph_embedding(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """First embedding of `pattern` into `host` in deterministic search order.

    Returns a tuple mapping pattern vertex -> host vertex, or None.  Host
    candidates are always tried in ascending id order, so the reported
    embedding is reproducible.
    """
    pn, hn = pattern.n, host.n
    if pn > hn or pattern.edge_count > host.edge_count:
        return None
    if pn == 0:
        return ()
    pat_degs = pattern.degrees()
    host_degs = host.degrees()
    for pd, hd in zip(sorted(pat_degs, reverse=True), sorted(host_degs, reverse=True)):
        if pd > hd:
            return None

    order = _pattern_order(pattern)
    # For each position: positions of earlier pattern neighbors, needed degree.
    pos_of = {v: i for i, v in enumerate(order)}
    earlier = []
    for i, v in enumerate(order):
        earlier.append([pos_of[u] for u in pattern.neighbors(v) if pos_of[u] < i])
    max_deg = max(host_degs) if hn else 0
    deg_ok = [0] * (max(max(pat_degs, default=0), 0) + 1)
    for d in range(len(deg_ok)):
        mask = 0
        for h in range(hn):
            if host_degs[h] >= d:
                mask |= 1 << h
        deg_ok[d] = mask

    hadj = host.adj
    full = (1 << hn) - 1
    assignment = [0] * pn

    def place(i: int, used: int) -> bool:
        if i == pn:
            return True
        cand = full & ~used
        for j in earlier[i]:
            cand &= hadj[assignment[j]]
        cand &= deg_ok[pat_degs[order[i]]]
        while cand:
            low = cand & -cand
            cand ^= low
            assignment[i] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
        return False

    if not place(0, 0):
        return None
    result = [0] * pn
    for i, v in enumerate(order):
        result[v] = assignment[i]
    return tuple(result)


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff host has a (not necessarily induced) subgraph isomorphic to pattern."""
    return find_subgraph_embedding(host, pattern) is not None


def is_cll_free(g: Graph, l: int) -> bool:
    """True iff g has no pair of l-cycles sharing exactly one vertex."""
    if l < 3:
        raise ValueError("need l >= 3")
    return not contains_subgraph(g, cll_pattern(l))


def is_theta_free(g: Graph, k: int) -> bool:
    """True iff no k-vertex cycle-with-chord graph embeds in g."""
    if k < 4:
        raise ValueError("need k >= 4")
    return all(not contains_subgraph(g, member) for member in theta_family(k))


def cll_join_free_condition(p: PathPartition, l: int) -> bool:
    """Arithmetic test: the dominating-pair join over p avoids the shared-vertex
    double l-cycle iff n1+n2 <= 2l-4 and (n1 <= l-2 or n2+n3 <= l-3).

    Stated for l >= 4; missing parts count as 0.
    """
    if l < 4:
        raise ValueError("condition applies for l >= 4; use c33_join_free_condition for l = 3")
    n1, n2, n3 = p.part(0), p.part(1), p.part(2)
    return n1 + n2 <= 2 * l - 4 and (n1 <= l - 2 or n2 + n3 <= l - 3)


def c33_join_free_condition(p: PathPartition) -> bool:
    """The join avoids the double triangle iff the path union is edgeless (n1 <= 1).

    With the dominating edge already present, a path edge plus any third path
    vertex completes two triangles meeting in one vertex.  The single
    exception is the partition [2], whose join has only 4 vertices and cannot
    host the 5-vertex pattern at all.
    """
    return p.part(0) <= 1 or p.total <= 2


def theta_join_free_condition(p: PathPartition, k: int) -> bool:
    """The join avoids every k-vertex Theta graph iff n1 + n2 <= k - 3 (k >= 5)."""
    if k < 5:
        raise ValueError("condition applies for k >= 5")
    return p.part(0) + p.part(1) <= k - 3


def join_free_condition(pattern: ForbiddenPattern, p: PathPartition) -> bool:
    """Dispatch the arithmetic freeness condition for a cll/theta pattern."""
    if pattern.kind == "cll":
        if pattern.order == 3:
            return c33_join_free_condition(p)
        return cll_join_free_condition(p, pattern.order)
    if pattern.kind == "theta":
        return theta_join_free_condition(p, pattern.order)
    raise ValueError("no arithmetic condition for explicit patterns")


@dataclass(frozen=True)
class JoinDecomposition:
    """An adjacent dominating pair plus the path partition of the rest."""

    pair: tuple[int, int]
    partition: PathPartition


def decompose_join(g: Graph) -> JoinDecomposition | None:
    """Recover a dominating adjacent pair whose removal leaves a path union.

    Returns the lexicographically smallest such pair, or None.  Note the pair
    must be adjacent: the complete bipartite K_{2,n-2} is deliberately not
    recognized here.
    """
    n = g.n
    if n < 3:
        return None
    universal = [v for v in range(n) if g.degree(v) == n - 1]
    for i, u in enumerate(universal):
        for w in universal[i + 1:]:
            rest = [v for v in range(n) if v != u and v != w]
            sub = induced_subgraph(g, rest)
            if any(d > 2 for d in sub.degrees()):
                continue
            comps = connected_components(sub)
            if any(
                sum(sub.degree(v) for v in comp) // 2 != len(comp) - 1
                for comp in comps
            ):
                continue  # a cycle component
            parts = tuple(sorted((len(c) for c in comps), reverse=True))
            return JoinDecomposition((u, w), PathPartition(parts))
    return None


@dataclass(frozen=True)
class Mismatch:
    parts: tuple[int, ...]
    condition_says_free: bool
    oracle_says_free: bool


@dataclass(frozen=True)
class AgreementReport:
    kind: str
    parameter: int
    max_total: int
    checked: int
    mismatches: tuple[Mismatch, ...]

    @property
    def agreement(self) -> bool:
        return not self.mismatches


def condition_oracle_agreement(kind: str, parameter: int, max_total: int) -> AgreementReport:
    """Exhaustively compare an arithmetic freeness condition with the brute
    subgraph oracle over all path partitions of total 1..max_total.

    kind is one of 'cll' (parameter l >= 4), 'theta' (parameter k >= 5) or
    'c33' (parameter ignored, fixed to 3).
    """
    if kind == "cll":
        if parameter < 4:
            raise ValueError("cll agreement needs l >= 4")
        condition = lambda p: cll_join_free_condition(p, parameter)
        oracle = lambda g: is_cll_free(g, parameter)
    elif kind == "theta":
        if parameter < 5:
            raise ValueError("theta agreement needs k >= 5")
        condition = lambda p: theta_join_free_condition(p, parameter)
        oracle = lambda g: is_theta_free(g, parameter)
    elif kind == "c33":
        parameter = 3
        condition = c33_join_free_condition
        oracle = lambda g: is_cll_free(g, 3)
    else:
        raise ValueError(f"unknown agreement kind {kind!r}")

    checked = 0
    mismatches = []
    for total in range(1, max_total + 1):
        for p in enumerate_partitions(total):
            checked += 1
            cond = condition(p)
            host = join_k2(realize_partition(p))
            truth = oracle(host)
            if cond != truth:
                mismatches.append(Mismatch(p.parts, cond, truth))
    mismatches.sort(key=lambda m: m.parts)
    return AgreementReport(kind, parameter, max_total, checked, tuple(mismatches))
