"""Planarity decision: edge-bound prefilter plus face-by-face embedding.

The core test embeds each biconnected block incrementally (the classical
Demoucron-Malgrange-Pertuiset scheme): start from a cycle, then repeatedly
place a bridge fragment with the fewest admissible faces.  A fragment with no
admissible face certifies non-planarity.  Quadratic-ish, which is fine at
desk scale, and easy to convince yourself is correct.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph

__all__ = ["PlanarityResult", "is_planar", "planarity_check"]


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    reason: str


def is_planar(g: Graph) -> bool:
    return planarity_check(g).planar


def planarity_check(g: Graph) -> PlanarityResult:
    n, m = g.n, g.edge_count
    if n <= 4:
        return PlanarityResult(True, "at most four vertices")
    if m > 3 * n - 6:
        return PlanarityResult(False, "edge count exceeds 3n-6")
    for block in _biconnected_blocks(g):
        bn, bm = block.n, block.edge_count
        if bn < 5:
            continue
        if bm > 3 * bn - 6:
            return PlanarityResult(False, "edge count exceeds 3n-6 in a biconnected block")
        if not _embed_block(block):
            return PlanarityResult(False, "a bridge fragment has no admissible face")
    return PlanarityResult(True, "embedding constructed")


def _biconnected_blocks(g: Graph) -> list[Graph]:
    """Biconnected components as relabeled graphs (single edges included)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(list(g.neighbors(root))))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(list(g.neighbors(v)))))
                    advanced = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if not advanced:
                stack.pop()
                if stack:
                    pu = stack[-1][0]
                    if low[u] < low[pu]:
                        low[pu] = low[u]
                    if low[u] >= disc[pu]:
                        block = []
                        while edge_stack:
                            e = edge_stack.pop()
                            block.append(e)
                            if e == (pu, u):
                                break
                        if block:
                            blocks.append(block)
    out = []
    for block in blocks:
        verts = sorted({x for e in block for x in e})
        index = {x: i for i, x in enumerate(verts)}
        out.append(Graph.from_edges(len(verts), [(index[a], index[b]) for a, b in block]))
    return out


def _find_cycle(g: Graph) -> list[int]:
    """Any cycle of a biconnected graph on >= 3 vertices, as a vertex list."""
    parent: dict[int, int | None] = {0: None}
    stack = [(0, iter(list(g.neighbors(0))))]
    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if v == parent[u]:
                continue
            if v in parent:
                chain = [u]
                while chain[-1] != v:
                    chain.append(parent[chain[-1]])
                return chain
            parent[v] = u
            stack.append((v, iter(list(g.neighbors(v)))))
            advanced = True
            break
        if not advanced:
            stack.pop()
    raise ValueError("graph has no cycle")


def _path_through(g: Graph, comp: set[int], a: int, b: int) -> list[int]:
    """Shortest a..b path whose interior stays inside the fragment component."""
    prev: dict[int, int] = {}
    queue: deque[int] = deque()
    for x in g.neighbors(a):
        if x in comp and x not in prev:
            prev[x] = a
            queue.append(x)
    while queue:
        x = queue.popleft()
        if g.has_edge(x, b):
            seq = [x]
            while seq[-1] != a:
                seq.append(prev[seq[-1]])
            return list(reversed(seq)) + [b]
        for y in g.neighbors(x):
            if y in comp and y not in prev:
                prev[y] = x
                queue.append(y)
    raise AssertionError("fragment attachment pair not connected through the fragment")


def _embed_block(g: Graph) -> bool:
    """Face-by-face embedding of a biconnected graph; True iff planar."""
    n = g.n
    cycle = _find_cycle(g)
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]
    in_h = bytearray(n)
    for v in cycle:
        in_h[v] = 1

    def ekey(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    embedded = {ekey(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    total = g.edge_count

    while len(embedded) < total:
        # fragments: unembedded chords between embedded vertices, then the
        # connected pieces of the not-yet-embedded rest with their attachments
        fragments: list[tuple[tuple[int, ...], set[int] | None]] = []
        for u in range(n):
            if not in_h[u]:
                continue
            for v in g.neighbors(u):
                if v > u and in_h[v] and ekey(u, v) not in embedded:
                    fragments.append(((u, v), None))
        seen = bytearray(n)
        for s in range(n):
            if in_h[s] or seen[s]:
                continue
            comp = set()
            atts = set()
            queue = deque([s])
            seen[s] = 1
            while queue:
                x = queue.popleft()
                comp.add(x)
                for y in g.neighbors(x):
                    if in_h[y]:
                        atts.add(y)
                    elif not seen[y]:
                        seen[y] = 1
                        queue.append(y)
            fragments.append((tuple(sorted(atts)), comp))

        face_sets = [set(f) for f in faces]
        best_idx = -1
        best_adm: list[int] = []
        for idx, (atts, _) in enumerate(fragments):
            adm = [fi for fi, fs in enumerate(face_sets) if fs.issuperset(atts)]
            if best_idx < 0 or len(adm) < len(best_adm):
                best_idx, best_adm = idx, adm
                if not adm:
                    return False

        atts, comp = fragments[best_idx]
        a, b = atts[0], atts[1]
        path = [a, b] if comp is None else _path_through(g, comp, a, b)
        face = faces[best_adm[0]]
        i, j = face.index(a), face.index(b)
        if i <= j:
            arc1 = face[i:j + 1]
            arc2 = face[j:] + face[:i + 1]
        else:
            arc1 = face[i:] + face[:j + 1]
            arc2 = face[j:i + 1]
        interior = path[1:-1]
        faces[best_adm[0]] = arc1 + interior[::-1]
        faces.append(arc2 + interior)
        for v in interior:
            in_h[v] = 1
        for t in range(len(path) - 1):
            embedded.add(ekey(path[t], path[t + 1]))
    return True
