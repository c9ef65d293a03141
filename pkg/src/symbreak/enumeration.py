"""Canonical forms and isomorph-free generation of small connected graphs."""

from __future__ import annotations

from typing import Iterator

from .errors import UnsupportedSize
from .graph import Graph

MAX_ENUM_N = 8


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into every cell;
    sub-cells are ordered by that vector, so the result is label-invariant.
    """
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                cnt = [0] * k
                for w in g.adj[v]:
                    cnt[where[w]] += 1
                groups.setdefault(tuple(cnt), []).append(v)
            for key in sorted(groups):
                out.append(groups[key])
        if len(out) == len(cells):
            return out
        cells = out


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Complete isomorphism invariant: ``(n, adjacency bits)`` of the best relabeling.

    Individualization-refinement without automorphism pruning; the
    lexicographically largest adjacency string over all search leaves wins.
    """
    n = g.n
    best: list[tuple[int, ...] | None] = [None]

    def leaf_key(order: list[int]) -> tuple[int, ...]:
        return tuple(1 if g.has_edge(order[i], order[j]) else 0
                     for j in range(1, n) for i in range(j))

    def search(cells: list[list[int]]) -> None:
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            key = leaf_key([c[0] for c in cells])
            if best[0] is None or key > best[0]:
                best[0] = key
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return n, best[0]


def graph_from_canonical(key: tuple[int, tuple[int, ...]]) -> Graph:
    n, bits = key
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph(n, [p for p, b in zip(pairs, bits) if b])


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return canonical_form(a) == canonical_form(b)


def enumerate_connected_graphs(n: int, max_n: int = MAX_ENUM_N) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    level n is reached from level n-1 by attaching a new vertex to each
    nonempty neighbour set. Output is sorted by (edge count, canonical bits).
    """
    if n < 1 or n > max_n:
        raise UnsupportedSize(f"enumeration supports 1 <= n <= {max_n}, got {n}")
    level = {canonical_form(Graph(1))}
    for k in range(2, n + 1):
        nxt = set()
        for key in level:
            parent = graph_from_canonical(key)
            new = k - 1
            for mask in range(1, 1 << new):
                edges = list(parent.edges)
                edges.extend((u, new) for u in range(new) if mask >> u & 1)
                nxt.add(canonical_form(Graph(k, edges)))
        level = nxt
    for key in sorted(level, key=lambda c: (sum(c[1]), c[1])):
        yield graph_from_canonical(key)
