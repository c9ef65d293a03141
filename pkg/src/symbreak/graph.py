"""Undirected simple graphs on vertices 0..n-1 with stable edge ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import EmptySourceSet, NotATree, UnsupportedSize

UNREACHABLE = -1


class Graph:
    """Immutable simple graph.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; the edge list
    is sorted lexicographically and an edge's id is its position in it.
    """

    __slots__ = ("n", "edges", "adj", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 1:
            raise UnsupportedSize(f"graphs need at least one vertex, got n={n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self._edge_index = {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_id(self, u: int, v: int) -> int:
        """Id of edge ``{u, v}``; raises ``KeyError`` if absent."""
        return self._edge_index[(u, v) if u < v else (v, u)]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


# -- small constructors used by tests, fixtures and the CLI -----------------

def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabeled 0..k-1 in the given order.

    Returns the subgraph and the map from new index to original vertex.
    """
    pos = {v: i for i, v in enumerate(vertices)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(vertices), edges), list(vertices)


# -- connectivity and distances ----------------------------------------------

def multi_source_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Hop distance from the nearest source; ``UNREACHABLE`` (-1) if none."""
    src = sorted(set(sources))
    if not src:
        raise EmptySourceSet("multi_source_distances needs at least one source")
    for s in src:
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    queue = deque(src)
    for s in src:
        dist[s] = 0
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(g: Graph) -> list[list[int]]:
    return [multi_source_distances(g, [v]) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    return UNREACHABLE not in multi_source_distances(g, [0])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def has_cycle(g: Graph) -> bool:
    # a forest with c components has exactly n - c edges
    return g.m > g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def tree_center(g: Graph) -> list[int]:
    """Center of a tree by iterated leaf removal: one vertex, or two adjacent ones."""
    if not is_tree(g):
        raise NotATree("tree_center requires a connected acyclic graph")
    if g.n <= 2:
        return list(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    layer = [v for v in range(g.n) if deg[v] == 1]
    remaining = g.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for u in layer:
            deg[u] = 0
            for w in g.adj[u]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)
